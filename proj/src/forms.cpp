#include "triweights/forms.hpp"

#include <map>
#include <stdexcept>

namespace triweights {

PolyForm PolyForm::scalar(const BaryPolynomial& f) { return PolyForm{0, {f, BaryPolynomial()}}; }

PolyForm PolyForm::one_form(const BaryPolynomial& p, const BaryPolynomial& q) {
  return PolyForm{1, {p, q}};
}

PolyForm PolyForm::two_form(const BaryPolynomial& f) { return PolyForm{2, {f, BaryPolynomial()}}; }

bool equal_as_functions(const PolyForm& a, const PolyForm& b) {
  if (a.k != b.k) return false;
  int ncomp = a.k == 1 ? 2 : 1;
  for (int i = 0; i < ncomp; ++i)
    if (!equal_as_functions(a.c[i], b.c[i])) return false;
  return true;
}

int space_dim(int r, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("space_dim: k must be 0, 1 or 2");
  if (r < k) throw std::invalid_argument("space_dim: level must be >= k");
  int d = r - k;
  int scalar = (d + 1) * (d + 2) / 2;
  return k == 1 ? 2 * scalar : scalar;
}

std::vector<PolyForm> monomial_basis(int degree, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("monomial_basis: k must be 0, 1 or 2");
  std::vector<BaryPolynomial> scalars;
  for (const MultiIndex& a : indices_of_degree(degree))
    scalars.push_back(BaryPolynomial::monomial(a, 1));
  std::vector<PolyForm> out;
  if (k == 0) {
    for (const auto& s : scalars) out.push_back(PolyForm::scalar(s));
  } else if (k == 1) {
    for (const auto& s : scalars) out.push_back(PolyForm::one_form(s, BaryPolynomial()));
    for (const auto& s : scalars) out.push_back(PolyForm::one_form(BaryPolynomial(), s));
  } else {
    for (const auto& s : scalars) out.push_back(PolyForm::two_form(s));
  }
  return out;
}

std::vector<PolyForm> cartesian_basis(int degree, int k, const Triangle& t) {
  if (k < 0 || k > 2) throw std::invalid_argument("cartesian_basis: k must be 0, 1 or 2");
  BaryPolynomial x, y;
  for (int i = 0; i < 3; ++i) {
    MultiIndex e;
    e.e[i] = 1;
    x += BaryPolynomial::monomial(e, t.v[i].x);
    y += BaryPolynomial::monomial(e, t.v[i].y);
  }
  std::vector<BaryPolynomial> scalars;
  for (int d = 0; d <= degree; ++d)
    for (int i = d; i >= 0; --i) {
      BaryPolynomial m(Rational(1));
      for (int p = 0; p < i; ++p) m = m * x;
      for (int p = 0; p < d - i; ++p) m = m * y;
      scalars.push_back(m);
    }
  std::vector<PolyForm> out;
  if (k == 0) {
    for (const auto& s : scalars) out.push_back(PolyForm::scalar(s));
  } else if (k == 1) {
    for (const auto& s : scalars) out.push_back(PolyForm::one_form(s, BaryPolynomial()));
    for (const auto& s : scalars) out.push_back(PolyForm::one_form(BaryPolynomial(), s));
  } else {
    for (const auto& s : scalars) out.push_back(PolyForm::two_form(s));
  }
  return out;
}

namespace {

BaryPolynomial partial(const BaryPolynomial& f, int axis, const std::array<Vec2, 3>& grads) {
  BaryPolynomial out;
  for (int i = 0; i < 3; ++i) {
    Rational g = axis == 0 ? grads[i].x : grads[i].y;
    if (g == 0) continue;
    out += f.dlambda(i) * g;
  }
  return out;
}

}  // namespace

PolyForm exterior_derivative(const PolyForm& w, const Triangle& t) {
  auto grads = t.lambda_gradients();
  if (w.k == 0) return PolyForm::one_form(partial(w.c[0], 0, grads), partial(w.c[0], 1, grads));
  if (w.k == 1)
    return PolyForm::two_form(partial(w.c[1], 0, grads) - partial(w.c[0], 1, grads));
  throw std::invalid_argument("exterior_derivative: no 3-forms on the plane");
}

RationalMatrix derivative_matrix(int degree, int k, const Triangle& t) {
  if (degree < 1) throw std::invalid_argument("derivative_matrix: degree must be >= 1");
  if (k < 0 || k > 1) throw std::invalid_argument("derivative_matrix: k must be 0 or 1");
  std::vector<PolyForm> from = monomial_basis(degree, k);
  std::vector<MultiIndex> target = indices_of_degree(degree - 1);
  std::map<MultiIndex, int> pos;
  for (size_t i = 0; i < target.size(); ++i) pos[target[i]] = static_cast<int>(i);
  int ncomp = k == 0 ? 2 : 1;
  RationalMatrix m(static_cast<int>(target.size()) * ncomp, static_cast<int>(from.size()));
  for (size_t j = 0; j < from.size(); ++j) {
    PolyForm d = exterior_derivative(from[j], t);
    for (int comp = 0; comp < ncomp; ++comp)
      for (const auto& [a, coef] : d.c[comp].terms()) {
        auto it = pos.find(a);
        if (it == pos.end()) throw std::logic_error("derivative_matrix: non-homogeneous image");
        m.at(comp * static_cast<int>(target.size()) + it->second, static_cast<int>(j)) = coef;
      }
  }
  return m;
}

}  // namespace triweights
