#include "triweights/interp.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace triweights {

PolyForm interpolate(const PolyForm& target, const DofComplex& c) {
  int k = target.k;
  RationalMatrix v = vandermonde(c, k);
  if (v.rows() != v.cols()) throw std::logic_error("interpolate: weight system not square");
  std::vector<Rational> w(v.rows());
  for (int i = 0; i < v.rows(); ++i) {
    if (k == 0)
      w[i] = weight(target, c.points[i], c.tri);
    else if (k == 1)
      w[i] = weight(target, c.edges[i], c.tri);
    else
      w[i] = weight(target, c.cells[i], c.tri);
  }
  std::vector<Rational> coef = RationalLU(v).solve(w);
  std::vector<PolyForm> basis = monomial_basis(c.r - k, k);
  PolyForm out;
  out.k = k;
  for (size_t j = 0; j < basis.size(); ++j) {
    out.c[0] += basis[j].c[0] * coef[j];
    out.c[1] += basis[j].c[1] * coef[j];
  }
  return out;
}

namespace {

Interpolant make_interpolant(int k, int degree, const Triangle& t, std::vector<double> coeffs) {
  Interpolant out{k, degree, t, std::move(coeffs), indices_of_degree(degree), {}};
  auto lc = t.lambda_coefficients();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.lam[i][j] = to_double(lc[i][j]);
  return out;
}

std::array<double, 3> lambda_at(const Interpolant& f, double x, double y) {
  return {f.lam[0][0] + f.lam[0][1] * x + f.lam[0][2] * y,
          f.lam[1][0] + f.lam[1][1] * x + f.lam[1][2] * y,
          f.lam[2][0] + f.lam[2][1] * x + f.lam[2][2] * y};
}

double eval_block(const Interpolant& f, size_t offset, const std::array<double, 3>& l) {
  double sum = 0;
  for (size_t j = 0; j < f.exponents.size(); ++j) {
    double term = f.coeffs[offset + j];
    if (term == 0) continue;
    const MultiIndex& a = f.exponents[j];
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < a.e[i]; ++e) term *= l[i];
    sum += term;
  }
  return sum;
}

}  // namespace

double Interpolant::eval_scalar(double x, double y) const {
  if (k != 0) throw std::invalid_argument("eval_scalar: not a 0-form");
  return eval_block(*this, 0, lambda_at(*this, x, y));
}

std::array<double, 2> Interpolant::eval_vector(double x, double y) const {
  if (k != 1) throw std::invalid_argument("eval_vector: not a 1-form");
  auto l = lambda_at(*this, x, y);
  return {eval_block(*this, 0, l), eval_block(*this, exponents.size(), l)};
}

Interpolant interpolate(const ScalarField& f, const DofComplex& c, int order) {
  (void)order;
  RationalMatrix v = vandermonde(c, 0);
  Eigen::MatrixXd vd = to_eigen(v);
  Eigen::VectorXd rhs(v.rows());
  for (int i = 0; i < v.rows(); ++i) rhs(i) = weight_numeric(f, c.points[i], c.tri);
  Eigen::VectorXd sol = vd.partialPivLu().solve(rhs);
  std::vector<double> coeffs(sol.data(), sol.data() + sol.size());
  return make_interpolant(0, c.r, c.tri, std::move(coeffs));
}

Interpolant interpolate(const VectorField& f, const DofComplex& c, int order) {
  RationalMatrix v = vandermonde(c, 1);
  Eigen::MatrixXd vd = to_eigen(v);
  Eigen::VectorXd rhs(v.rows());
  for (int i = 0; i < v.rows(); ++i) rhs(i) = weight_numeric(f, c.edges[i], c.tri, order);
  Eigen::VectorXd sol = vd.partialPivLu().solve(rhs);
  std::vector<double> coeffs(sol.data(), sol.data() + sol.size());
  return make_interpolant(1, c.r - 1, c.tri, std::move(coeffs));
}

Interpolant interpolate_affine(const ScalarField& f, const Triangle& t) {
  // Weights at level 1 are the vertex values, and the lambda monomials are
  // exactly the vertex-value cardinal basis, so no system is solved.
  std::vector<double> coeffs;
  for (int i = 0; i < 3; ++i)
    coeffs.push_back(f(to_double(t.v[i].x), to_double(t.v[i].y)));
  return make_interpolant(0, 1, t, std::move(coeffs));
}

bool check_commuting(const PolyForm& omega, const DofComplex& c) {
  PolyForm d = exterior_derivative(omega, c.tri);
  if (omega.k == 0) {
    std::vector<Rational> w0(c.points.size());
    for (size_t i = 0; i < c.points.size(); ++i) w0[i] = weight(omega, c.points[i], c.tri);
    for (size_t e = 0; e < c.edges.size(); ++e) {
      Rational discrete = 0;
      for (size_t p = 0; p < c.points.size(); ++p)
        if (c.d1[p][e] != 0) discrete += Rational(c.d1[p][e]) * w0[p];
      if (discrete != weight(d, c.edges[e], c.tri)) return false;
    }
    return true;
  }
  if (omega.k == 1) {
    std::vector<Rational> w1(c.edges.size());
    for (size_t e = 0; e < c.edges.size(); ++e) w1[e] = weight(omega, c.edges[e], c.tri);
    for (size_t ci = 0; ci < c.cells.size(); ++ci) {
      Rational discrete = 0;
      for (size_t e = 0; e < c.edges.size(); ++e)
        if (c.d2[e][ci] != 0) discrete += Rational(c.d2[e][ci]) * w1[e];
      if (discrete != weight(d, c.cells[ci], c.tri)) return false;
    }
    return true;
  }
  throw std::invalid_argument("check_commuting: input must be a 0- or 1-form");
}

bool check_commuting(const BaryPolynomial& omega0, const DofComplex& c) {
  return check_commuting(PolyForm::scalar(omega0), c);
}

bool commuting_identity(const DofComplex& c) {
  RationalMatrix d1t(static_cast<int>(c.edges.size()), static_cast<int>(c.points.size()));
  for (size_t p = 0; p < c.points.size(); ++p)
    for (size_t e = 0; e < c.edges.size(); ++e) d1t.at(static_cast<int>(e), static_cast<int>(p)) = c.d1[p][e];
  RationalMatrix d2t(static_cast<int>(c.cells.size()), static_cast<int>(c.edges.size()));
  for (size_t e = 0; e < c.edges.size(); ++e)
    for (size_t ci = 0; ci < c.cells.size(); ++ci)
      d2t.at(static_cast<int>(ci), static_cast<int>(e)) = c.d2[e][ci];
  RationalMatrix v0 = vandermonde(c, 0);
  RationalMatrix v1 = vandermonde(c, 1);
  RationalMatrix v2 = vandermonde(c, 2);
  if (!(d1t * v0 == v1 * derivative_matrix(c.r, 0, c.tri))) return false;
  return d2t * v1 == v2 * derivative_matrix(c.r - 1, 1, c.tri);
}

double zero_norm(const ScalarField& f, const Triangle& t, int density) {
  double best = 0;
  for (const BaryPoint& p : principal_lattice(density)) {
    Vec2 q = t.point(p);
    best = std::max(best, std::abs(f(to_double(q.x), to_double(q.y))));
  }
  return best;
}

double zero_norm(const VectorField& f, const Triangle& t, int density, int order) {
  double best = 0;
  for (const Edge& e : lattice_edges(density)) {
    Vec2 a = t.point(e.p), b = t.point(e.q);
    double dx = to_double(b.x) - to_double(a.x);
    double dy = to_double(b.y) - to_double(a.y);
    double len = std::sqrt(dx * dx + dy * dy);
    double integral = weight_numeric(f, e, t, order);
    best = std::max(best, std::abs(integral) / len);
  }
  return best;
}

std::vector<ConvRow> convergence_experiment(const Triangle& t, int max_degree, int quad_order,
                                            int density) {
  const double pi = std::acos(-1.0);
  ScalarField omega = [pi](double x, double y) { return std::exp(x) * std::sin(pi * y); };
  VectorField domega = [pi](double x, double y) {
    return std::array<double, 2>{std::exp(x) * std::sin(pi * y),
                                 pi * std::exp(x) * std::cos(pi * y)};
  };
  std::vector<ConvRow> rows;
  double ref0 = zero_norm(omega, t, density);
  for (int d = 1; d <= max_degree; ++d) {
    Interpolant p = d == 1 ? interpolate_affine(omega, t)
                           : interpolate(omega, build_complex(t, d), quad_order);
    ScalarField resid = [&omega, &p](double x, double y) {
      return omega(x, y) - p.eval_scalar(x, y);
    };
    rows.push_back(ConvRow{d, 0, zero_norm(resid, t, density), ref0});
  }
  double ref1 = zero_norm(domega, t, density, quad_order);
  for (int d = 1; d <= max_degree; ++d) {
    Interpolant p = interpolate(domega, build_complex(t, d + 1), quad_order);
    VectorField resid = [&domega, &p](double x, double y) {
      auto a = domega(x, y);
      auto b = p.eval_vector(x, y);
      return std::array<double, 2>{a[0] - b[0], a[1] - b[1]};
    };
    rows.push_back(ConvRow{d, 1, zero_norm(resid, t, density, quad_order), ref1});
  }
  return rows;
}

VerifyReport verify_all(const Triangle& t, int r, const std::vector<BaryPoint>& gamma) {
  VerifyReport rep;
  rep.r = r;
  DofComplex c = build_complex(t, r, gamma);
  rep.complex = validate(c);
  for (int k = 0; k <= 2; ++k) {
    rep.dims[k] = space_dim(r, k);
    RationalMatrix v = vandermonde(c, k);
    rep.ranks[k] = exact_rank(v);
    rep.unisolvent[k] = v.rows() == v.cols() && v.rows() == rep.dims[k] && rep.ranks[k] == rep.dims[k];
    rep.cond[k] = rep.unisolvent[k] ? cond2(v) : std::numeric_limits<double>::infinity();
  }
  rep.commuting = rep.unisolvent[0] && rep.unisolvent[1] && rep.unisolvent[2] &&
                  commuting_identity(c);
  rep.ok = rep.complex.ok && rep.unisolvent[0] && rep.unisolvent[1] && rep.unisolvent[2] &&
           rep.commuting;
  return rep;
}

VerifyReport verify_all(const Triangle& t, int r) { return verify_all(t, r, gamma_set(r)); }

std::string to_json(const VerifyReport& rep) {
  nlohmann::ordered_json j;
  j["r"] = rep.r;
  j["complex"] = {{"ok", rep.complex.ok},
                  {"points", rep.complex.n_points},
                  {"edges", rep.complex.n_edges},
                  {"cells", rep.complex.n_cells},
                  {"euler", rep.complex.euler},
                  {"failures", rep.complex.failures}};
  for (int k = 0; k <= 2; ++k) {
    nlohmann::ordered_json jk;
    jk["dim"] = rep.dims[k];
    jk["rank"] = rep.ranks[k];
    jk["unisolvent"] = rep.unisolvent[k];
    if (std::isfinite(rep.cond[k]))
      jk["cond2"] = rep.cond[k];
    else
      jk["cond2"] = "inf";
    j["k" + std::to_string(k)] = jk;
  }
  j["commuting"] = rep.commuting;
  j["ok"] = rep.ok;
  return j.dump(2) + "\n";
}

}  // namespace triweights
