#include "triweights/barypoly.hpp"

#include <stdexcept>

#include "triweights/geometry.hpp"

namespace triweights {

std::vector<MultiIndex> indices_of_degree(int degree) {
  if (degree < 0) throw std::invalid_argument("indices_of_degree: negative degree");
  std::vector<MultiIndex> out;
  for (int e0 = degree; e0 >= 0; --e0)
    for (int e1 = degree - e0; e1 >= 0; --e1) out.push_back(MultiIndex{{e0, e1, degree - e0 - e1}});
  return out;
}

BaryPoint::BaryPoint(Rational l0, Rational l1, Rational l2) : lambda{l0, l1, l2} {
  if (l0 + l1 + l2 != 1) throw std::invalid_argument("BaryPoint: coordinates must sum to 1");
}

int compare(const BaryPoint& a, const BaryPoint& b) {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(a.lambda[i], b.lambda[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool operator==(const BaryPoint& a, const BaryPoint& b) { return compare(a, b) == 0; }
bool operator<(const BaryPoint& a, const BaryPoint& b) { return compare(a, b) < 0; }

BaryPolynomial::BaryPolynomial(const Rational& constant) {
  if (constant != 0) terms_[MultiIndex{}] = constant;
}

BaryPolynomial BaryPolynomial::monomial(const MultiIndex& alpha, const Rational& coeff) {
  for (int e : alpha.e)
    if (e < 0) throw std::invalid_argument("BaryPolynomial: negative exponent");
  BaryPolynomial p;
  if (coeff != 0) p.terms_[alpha] = coeff;
  return p;
}

int BaryPolynomial::degree() const {
  int d = 0;
  for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
  return d;
}

void BaryPolynomial::set_coeff(const MultiIndex& alpha, const Rational& c) {
  if (c == 0)
    terms_.erase(alpha);
  else
    terms_[alpha] = c;
}

BaryPolynomial& BaryPolynomial::operator+=(const BaryPolynomial& o) {
  for (const auto& [a, c] : o.terms_) {
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_[a] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BaryPolynomial& BaryPolynomial::operator-=(const BaryPolynomial& o) {
  return *this += o * Rational(-1);
}

BaryPolynomial BaryPolynomial::operator+(const BaryPolynomial& o) const {
  BaryPolynomial r = *this;
  r += o;
  return r;
}

BaryPolynomial BaryPolynomial::operator-(const BaryPolynomial& o) const {
  BaryPolynomial r = *this;
  r -= o;
  return r;
}

BaryPolynomial BaryPolynomial::operator*(const BaryPolynomial& o) const {
  BaryPolynomial r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      MultiIndex s{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
      auto it = r.terms_.find(s);
      Rational prod = ca * cb;
      if (it == r.terms_.end()) {
        if (prod != 0) r.terms_[s] = prod;
      } else {
        it->second += prod;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

BaryPolynomial BaryPolynomial::operator*(const Rational& c) const {
  BaryPolynomial r;
  if (c == 0) return r;
  for (const auto& [a, ca] : terms_) r.terms_[a] = ca * c;
  return r;
}

Rational BaryPolynomial::operator()(const BaryPoint& p) const {
  Rational sum = 0;
  for (const auto& [a, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < a.e[i]; ++e) term *= p.lambda[i];
    sum += term;
  }
  return sum;
}

double BaryPolynomial::eval(const std::array<double, 3>& lambda) const {
  double sum = 0;
  for (const auto& [a, c] : terms_) {
    double term = c.get_d();
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < a.e[i]; ++e) term *= lambda[i];
    sum += term;
  }
  return sum;
}

BaryPolynomial BaryPolynomial::dlambda(int i) const {
  if (i < 0 || i > 2) throw std::invalid_argument("dlambda: index out of range");
  BaryPolynomial r;
  for (const auto& [a, c] : terms_) {
    if (a.e[i] == 0) continue;
    MultiIndex b = a;
    b.e[i] -= 1;
    r.terms_[b] = c * a.e[i];
  }
  return r;
}

BaryPolynomial BaryPolynomial::substitute(const std::array<BaryPolynomial, 3>& images) const {
  BaryPolynomial out;
  for (const auto& [a, c] : terms_) {
    BaryPolynomial term(c);
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < a.e[i]; ++e) term = term * images[i];
    out += term;
  }
  return out;
}

BaryPolynomial BaryPolynomial::homogenize(int degree) const {
  BaryPolynomial sum_l;  // lambda0 + lambda1 + lambda2
  for (int i = 0; i < 3; ++i) {
    MultiIndex e;
    e.e[i] = 1;
    sum_l += monomial(e, 1);
  }
  BaryPolynomial out;
  for (const auto& [a, c] : terms_) {
    int gap = degree - a.degree();
    if (gap < 0) throw std::invalid_argument("homogenize: term degree exceeds target");
    BaryPolynomial term = monomial(a, c);
    for (int i = 0; i < gap; ++i) term = term * sum_l;
    out += term;
  }
  return out;
}

bool equal_as_functions(const BaryPolynomial& a, const BaryPolynomial& b) {
  int d = std::max(a.degree(), b.degree());
  return a.homogenize(d) == b.homogenize(d);
}

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// int over a triangle of doubled area 1 (the chart convention).
Rational chart_monomial_integral(const MultiIndex& a) {
  Rational num = factorial(a.e[0]) * factorial(a.e[1]) * factorial(a.e[2]);
  return num / factorial(a.degree() + 2);
}

}  // namespace

Rational integrate_chart(const BaryPolynomial& p) {
  Rational sum = 0;
  for (const auto& [a, c] : p.terms()) sum += c * chart_monomial_integral(a);
  return sum;
}

Rational integrate(const BaryPolynomial& p, const Triangle& t) {
  return integrate_chart(p) * t.doubled_area();
}

Rational integrate_segment(const BaryPolynomial& p, const BaryPoint& a, const BaryPoint& b) {
  // lambda_i(t) = a_i + (b_i - a_i) t; expand p to a univariate polynomial
  // in t by convolution, then integrate term by term over [0, 1].
  Rational total = 0;
  for (const auto& [alpha, c] : p.terms()) {
    std::vector<Rational> poly{1};
    for (int i = 0; i < 3; ++i) {
      for (int e = 0; e < alpha.e[i]; ++e) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        Rational c0 = a.lambda[i];
        Rational c1 = b.lambda[i] - a.lambda[i];
        for (size_t j = 0; j < poly.size(); ++j) {
          next[j] += poly[j] * c0;
          next[j + 1] += poly[j] * c1;
        }
        poly = std::move(next);
      }
    }
    Rational integral = 0;
    for (size_t j = 0; j < poly.size(); ++j) integral += poly[j] / Rational(static_cast<long>(j + 1));
    total += c * integral;
  }
  return total;
}

BaryPolynomial affine_pullback(const BaryPolynomial& p, const AffineMap& f, const Triangle& domain) {
  // lambda_i of f(x) is affine in x, hence equals the barycentric-linear
  // interpolant of its values at the domain's vertices.
  std::array<BaryPolynomial, 3> images;
  std::array<BaryPoint, 3> fv = {domain.barycentric(f(domain.v[0])),
                                 domain.barycentric(f(domain.v[1])),
                                 domain.barycentric(f(domain.v[2]))};
  for (int i = 0; i < 3; ++i) {
    BaryPolynomial img;
    for (int j = 0; j < 3; ++j) {
      MultiIndex e;
      e.e[j] = 1;
      img += BaryPolynomial::monomial(e, fv[j].lambda[i]);
    }
    images[i] = img;
  }
  return p.substitute(images);
}

}  // namespace triweights
