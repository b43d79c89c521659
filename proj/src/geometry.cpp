#include "triweights/geometry.hpp"

#include <stdexcept>

#include "triweights/linalg.hpp"

namespace triweights {

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(const Rational& c, const Vec2& a) { return {c * a.x, c * a.y}; }
bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Triangle::Triangle(const Vec2& v0, const Vec2& v1, const Vec2& v2) : v{v0, v1, v2} {
  Rational d = cross(v1 - v0, v2 - v0);
  if (d == 0) throw std::invalid_argument("Triangle: degenerate vertices");
  if (d < 0) throw std::invalid_argument("Triangle: vertices must be counterclockwise");
}

Rational Triangle::doubled_area() const { return cross(v[1] - v[0], v[2] - v[0]); }
Rational Triangle::area() const { return doubled_area() / 2; }

BaryPoint Triangle::barycentric(const Vec2& p) const {
  Rational d = doubled_area();
  Rational l1 = cross(p - v[0], v[2] - v[0]) / d;
  Rational l2 = cross(v[1] - v[0], p - v[0]) / d;
  return BaryPoint(1 - l1 - l2, l1, l2);
}

Vec2 Triangle::point(const BaryPoint& b) const {
  return b.lambda[0] * v[0] + b.lambda[1] * v[1] + b.lambda[2] * v[2];
}

std::array<std::array<Rational, 3>, 3> Triangle::lambda_coefficients() const {
  // lambda_i vanishes on the opposite edge (p, q) and is 1 at v[i], so it
  // equals cross(x - p, q - p) / cross(v[i] - p, q - p); expand in x.
  std::array<std::array<Rational, 3>, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Vec2& p = v[(i + 1) % 3];
    const Vec2& q = v[(i + 2) % 3];
    Rational denom = cross(v[i] - p, q - p);
    out[i][0] = (p.y * (q.x - p.x) - p.x * (q.y - p.y)) / denom;
    out[i][1] = (q.y - p.y) / denom;
    out[i][2] = (p.x - q.x) / denom;
  }
  return out;
}

std::array<Vec2, 3> Triangle::lambda_gradients() const {
  auto c = lambda_coefficients();
  return {Vec2{c[0][1], c[0][2]}, Vec2{c[1][1], c[1][2]}, Vec2{c[2][1], c[2][2]}};
}

Triangle Triangle::unit_right() {
  return Triangle(Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1});
}

Vec2 AffineMap::operator()(const Vec2& p) const {
  return {m[0][0] * p.x + m[0][1] * p.y + t.x, m[1][0] * p.x + m[1][1] * p.y + t.y};
}

AffineMap AffineMap::then(const AffineMap& g) const {
  AffineMap r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = g.m[i][0] * m[0][j] + g.m[i][1] * m[1][j];
  r.t = g(t);
  return r;
}

Rational AffineMap::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

AffineMap AffineMap::identity() {
  AffineMap r;
  r.m = {{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  r.t = {0, 0};
  return r;
}

bool operator==(const AffineMap& a, const AffineMap& b) {
  return a.m == b.m && a.t == b.t;
}

BaryPoint tau_apply(const BaryPoint& xi, const BaryPoint& mu) {
  Rational s = xi.lambda[0];
  return BaryPoint(s * mu.lambda[0], s * mu.lambda[1] + xi.lambda[1],
                   s * mu.lambda[2] + xi.lambda[2]);
}

AffineMap tau_map(const Triangle& t, const BaryPoint& xi) {
  Rational s = xi.lambda[0];
  Vec2 image0 = t.point(xi);
  AffineMap f;
  f.m = {{{s, Rational(0)}, {Rational(0), s}}};
  f.t = image0 - s * t.v[0];
  return f;
}

std::vector<BaryPoint> principal_lattice(int r) {
  if (r < 1) throw std::invalid_argument("principal_lattice: degree must be >= 1");
  std::vector<BaryPoint> out;
  for (const MultiIndex& a : indices_of_degree(r))
    out.push_back(BaryPoint(ratio(a.e[0], r), ratio(a.e[1], r), ratio(a.e[2], r)));
  return out;
}

std::vector<BaryPoint> gamma_set(int r) {
  if (r < 2) throw std::invalid_argument("gamma_set: degree must be >= 2");
  if (r == 2) return {BaryPoint(1, 0, 0)};
  std::vector<BaryPoint> prev = gamma_set(r - 1);
  BaryPoint zeta = (r % 2 == 1) ? BaryPoint(ratio(r - 1, r), 0, ratio(1, r))
                                : BaryPoint(ratio(r - 1, r), ratio(1, r), 0);
  std::vector<BaryPoint> out;
  out.reserve(static_cast<size_t>(r) * (r - 1) / 2);
  for (const BaryPoint& mu : prev) out.push_back(tau_apply(zeta, mu));
  // New points along one boundary edge, skipping the one position already
  // covered by the translated copy.
  int skip = (r % 2 == 1) ? (r + 1) / 2 : r / 2;
  for (int i = 1; i <= r; ++i) {
    if (i == skip) continue;
    if (r % 2 == 1)
      out.push_back(BaryPoint(ratio(i, r), ratio(r - i, r), 0));
    else
      out.push_back(BaryPoint(ratio(i, r), 0, ratio(r - i, r)));
  }
  return out;
}

PoisedReport certify_poised(const std::vector<BaryPoint>& points, int degree) {
  std::vector<MultiIndex> basis = indices_of_degree(degree);
  PoisedReport rep;
  rep.dimension = static_cast<int>(basis.size());
  RationalMatrix m(static_cast<int>(points.size()), rep.dimension);
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      Rational val = 1;
      for (int axis = 0; axis < 3; ++axis)
        for (int e = 0; e < basis[j].e[axis]; ++e) val *= points[i].lambda[axis];
      m.at(static_cast<int>(i), static_cast<int>(j)) = val;
    }
  rep.rank = exact_rank(m);
  rep.poised = points.size() == basis.size() && rep.rank == rep.dimension;
  return rep;
}

}  // namespace triweights
