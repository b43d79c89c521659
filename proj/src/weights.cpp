#include "triweights/weights.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "triweights/quadrature.hpp"

namespace triweights {

Rational weight(const PolyForm& w, const BaryPoint& p, const Triangle&) {
  if (w.k != 0) throw std::invalid_argument("weight: point cells pair with 0-forms");
  return w.c[0](p);
}

Rational weight(const PolyForm& w, const Edge& e, const Triangle& t) {
  if (w.k != 1) throw std::invalid_argument("weight: edge cells pair with 1-forms");
  Vec2 a = t.point(e.p), b = t.point(e.q);
  Rational dx = b.x - a.x, dy = b.y - a.y;
  Rational total = 0;
  if (!w.c[0].is_zero()) total += dx * integrate_segment(w.c[0], e.p, e.q);
  if (!w.c[1].is_zero()) total += dy * integrate_segment(w.c[1], e.p, e.q);
  return total;
}

Rational weight(const PolyForm& w, const Cell2& cell, const Triangle& t) {
  if (w.k != 2) throw std::invalid_argument("weight: 2-cells pair with 2-forms");
  // Each signed family triangle pulls back to the full chart triangle:
  // lambda0 -> s*lambda0, lambda1 -> a + s*lambda1, lambda2 -> b + s*lambda2,
  // with area factor s^2. Cartesian measure adds the 2*Area factor.
  Rational sum = 0;
  for (const auto& [ft, sign] : cell.ie) {
    Rational s = ft.scale();
    if (s == 0) continue;
    std::array<BaryPolynomial, 3> images;
    images[0] = BaryPolynomial::monomial(MultiIndex{{1, 0, 0}}, s);
    images[1] = BaryPolynomial(ft.a) + BaryPolynomial::monomial(MultiIndex{{0, 1, 0}}, s);
    images[2] = BaryPolynomial(ft.b) + BaryPolynomial::monomial(MultiIndex{{0, 0, 1}}, s);
    sum += Rational(sign) * s * s * integrate_chart(w.c[0].substitute(images));
  }
  return sum * t.doubled_area();
}

double weight_numeric(const ScalarField& f, const BaryPoint& p, const Triangle& t) {
  Vec2 q = t.point(p);
  return f(to_double(q.x), to_double(q.y));
}

double weight_numeric(const VectorField& f, const Edge& e, const Triangle& t, int order) {
  Vec2 a = t.point(e.p), b = t.point(e.q);
  double ax = to_double(a.x), ay = to_double(a.y);
  double dx = to_double(b.x) - ax, dy = to_double(b.y) - ay;
  Rule1D gl = gauss_legendre((order + 2) / 2);
  double sum = 0;
  for (size_t i = 0; i < gl.x.size(); ++i) {
    auto pq = f(ax + gl.x[i] * dx, ay + gl.x[i] * dy);
    sum += gl.w[i] * (pq[0] * dx + pq[1] * dy);
  }
  return sum;
}

double weight_numeric(const ScalarField& f, const Cell2& cell, const Triangle& t, int order) {
  TriRule rule = triangle_rule(order);
  double v0x = to_double(t.v[0].x), v0y = to_double(t.v[0].y);
  double e1x = to_double(t.v[1].x) - v0x, e1y = to_double(t.v[1].y) - v0y;
  double e2x = to_double(t.v[2].x) - v0x, e2y = to_double(t.v[2].y) - v0y;
  double two_area = to_double(t.doubled_area());
  double total = 0;
  for (const auto& tri : cell.triangulation) {
    double au = to_double(tri[0].u), av = to_double(tri[0].v);
    double bu = to_double(tri[1].u), bv = to_double(tri[1].v);
    double cu = to_double(tri[2].u), cv = to_double(tri[2].v);
    double doubled_uv = (bu - au) * (cv - av) - (bv - av) * (cu - au);
    double piece = 0;
    for (size_t i = 0; i < rule.pts.size(); ++i) {
      double u = au + rule.pts[i][0] * (bu - au) + rule.pts[i][1] * (cu - au);
      double v = av + rule.pts[i][0] * (bv - av) + rule.pts[i][1] * (cv - av);
      double x = v0x + u * e1x + v * e2x;
      double y = v0y + u * e1y + v * e2y;
      piece += rule.w[i] * f(x, y);
    }
    total += piece * doubled_uv;
  }
  return total * two_area;
}

RationalMatrix vandermonde(const DofComplex& c, int k, Basis basis) {
  int degree = c.r - k;
  std::vector<PolyForm> forms =
      basis == Basis::Barycentric ? monomial_basis(degree, k) : cartesian_basis(degree, k, c.tri);
  int rows = k == 0   ? static_cast<int>(c.points.size())
             : k == 1 ? static_cast<int>(c.edges.size())
                      : static_cast<int>(c.cells.size());
  RationalMatrix m(rows, static_cast<int>(forms.size()));
  for (int j = 0; j < static_cast<int>(forms.size()); ++j)
    for (int i = 0; i < rows; ++i) {
      if (k == 0)
        m.at(i, j) = weight(forms[j], c.points[i], c.tri);
      else if (k == 1)
        m.at(i, j) = weight(forms[j], c.edges[i], c.tri);
      else
        m.at(i, j) = weight(forms[j], c.cells[i], c.tri);
    }
  return m;
}

RationalMatrix lattice_vandermonde(const Triangle& t, int degree, Basis basis) {
  std::vector<PolyForm> forms =
      basis == Basis::Barycentric ? monomial_basis(degree, 0) : cartesian_basis(degree, 0, t);
  std::vector<BaryPoint> pts = principal_lattice(degree);
  RationalMatrix m(static_cast<int>(pts.size()), static_cast<int>(forms.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = forms[j].c[0](pts[i]);
  return m;
}

namespace {

std::string bary_string(const BaryPoint& p) {
  return "(" + to_string(p.lambda[0]) + "," + to_string(p.lambda[1]) + "," +
         to_string(p.lambda[2]) + ")";
}

std::string scalar_label(const MultiIndex& a) {
  std::string s;
  const char* names[3] = {"l0", "l1", "l2"};
  for (int i = 0; i < 3; ++i) {
    if (a.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (a.e[i] > 1) s += "^" + std::to_string(a.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string cart_label(int i, int j) {
  std::string s;
  if (i > 0) s += i > 1 ? "x^" + std::to_string(i) : "x";
  if (j > 0) {
    if (!s.empty()) s += "*";
    s += j > 1 ? "y^" + std::to_string(j) : "y";
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::vector<std::string> cell_labels(const DofComplex& c, int k) {
  std::vector<std::string> out;
  if (k == 0) {
    for (const auto& p : c.points) out.push_back("v" + bary_string(p));
  } else if (k == 1) {
    for (const auto& e : c.edges) out.push_back("e" + bary_string(e.p) + bary_string(e.q));
  } else if (k == 2) {
    for (const auto& cell : c.cells) out.push_back("c" + bary_string(cell.xi));
  } else {
    throw std::invalid_argument("cell_labels: k must be 0, 1 or 2");
  }
  return out;
}

std::vector<std::string> basis_labels(int degree, int k, Basis basis) {
  std::vector<std::string> scalars;
  if (basis == Basis::Barycentric) {
    for (const MultiIndex& a : indices_of_degree(degree)) scalars.push_back(scalar_label(a));
  } else {
    for (int d = 0; d <= degree; ++d)
      for (int i = d; i >= 0; --i) scalars.push_back(cart_label(i, d - i));
  }
  std::vector<std::string> out;
  if (k == 0) return scalars;
  if (k == 1) {
    for (const auto& s : scalars) out.push_back(s + "*dx");
    for (const auto& s : scalars) out.push_back(s + "*dy");
    return out;
  }
  for (const auto& s : scalars) out.push_back(s + "*dxdy");
  return out;
}

std::string weights_csv(const RationalMatrix& m, const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels) {
  std::ostringstream out;
  out << "cell";
  for (const auto& c : col_labels) out << "," << c;
  out << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    out << row_labels[i];
    for (int j = 0; j < m.cols(); ++j) out << "," << to_string(m.at(i, j));
    out << "\n";
  }
  return out.str();
}

std::string weights_json(const RationalMatrix& m, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels) {
  nlohmann::ordered_json j;
  j["rows"] = row_labels;
  j["cols"] = col_labels;
  std::vector<std::vector<std::string>> entries;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m.at(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

}  // namespace triweights
