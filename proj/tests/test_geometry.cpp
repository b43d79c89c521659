#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "test_support.hpp"
#include "triweights/cells.hpp"
#include "triweights/complex.hpp"
#include "triweights/geometry.hpp"
#include "triweights/linalg.hpp"

using namespace triweights;

namespace {

BaryPoint bp(long a0, long a1, long a2, long den) {
  return BaryPoint(ratio(a0, den), ratio(a1, den), ratio(a2, den));
}

UV uv(long un, long ud, long vn, long vd) { return UV{ratio(un, ud), ratio(vn, vd)}; }

// Recursion with the odd/even zeta choice deliberately swapped; used to
// check that the parity convention is load-bearing.
std::vector<BaryPoint> gamma_wrong_parity(int r) {
  std::vector<BaryPoint> g{BaryPoint(1, 0, 0)};
  for (int s = 3; s <= r; ++s) {
    BaryPoint zeta = (s % 2 == 0) ? bp(s - 1, 0, 1, s) : bp(s - 1, 1, 0, s);
    std::vector<BaryPoint> next;
    for (const auto& p : g) next.push_back(tau_apply(zeta, p));
    int skip = (s % 2 == 1) ? (s + 1) / 2 : s / 2;
    for (int i = 1; i <= s; ++i) {
      if (i == skip) continue;
      if (s % 2 == 1)
        next.push_back(bp(i, s - i, 0, s));
      else
        next.push_back(bp(i, 0, s - i, s));
    }
    g = next;
  }
  return g;
}

// Union area of the subtracted triangles by exhaustive inclusion-exclusion
// over every subset, pruned only when the running intersection is already
// past the hypotenuse (supersets then stay empty).
void union_subsets(const std::vector<FamilyTriangle>& list, std::size_t start, const Rational& a,
                   const Rational& b, int sign, Rational& total) {
  for (std::size_t j = start; j < list.size(); ++j) {
    Rational na = std::max(a, list[j].a);
    Rational nb = std::max(b, list[j].b);
    Rational s = 1 - na - nb;
    if (s < 0) continue;
    total += Rational(sign) * s * s / 2;
    union_subsets(list, j + 1, na, nb, -sign, total);
  }
}

Rational exhaustive_cell_area(const std::vector<BaryPoint>& gamma, std::size_t i) {
  FamilyTriangle base{gamma[i].lambda[1], gamma[i].lambda[2]};
  std::vector<FamilyTriangle> clipped;
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (!(gamma[j].lambda[0] < gamma[i].lambda[0])) continue;
    auto t = intersect(base, FamilyTriangle{gamma[j].lambda[1], gamma[j].lambda[2]});
    if (t) clipped.push_back(*t);
  }
  Rational covered = 0;
  union_subsets(clipped, 0, base.a, base.b, +1, covered);
  return base.scale() * base.scale() / 2 - covered;
}

}  // namespace

TEST_CASE("triangle constructor enforces orientation") {
  CHECK_THROWS(Triangle({0, 0}, {0, 1}, {1, 0}));        // clockwise
  CHECK_THROWS(Triangle({0, 0}, {1, 1}, {2, 2}));        // collinear
  CHECK_THROWS(Triangle({1, 2}, {1, 2}, {3, 4}));        // repeated vertex
  Triangle t = Triangle::unit_right();
  CHECK(t.doubled_area() == 1);
  CHECK(t.area() == ratio(1, 2));
}

TEST_CASE("barycentric coordinates round-trip through points") {
  std::mt19937_64 rng(test_seed());
  for (int trial = 0; trial < 30; ++trial) {
    Triangle t = testsup::random_triangle(rng);
    BaryPoint b = testsup::random_bary_point(rng);
    CHECK(t.barycentric(t.point(b)) == b);
  }
}

TEST_CASE("lambda coefficient rows reproduce barycentric coordinates") {
  std::mt19937_64 rng(test_seed() + 1);
  for (int trial = 0; trial < 20; ++trial) {
    Triangle t = testsup::random_triangle(rng);
    auto rows = t.lambda_coefficients();
    auto grads = t.lambda_gradients();
    Vec2 p{testsup::random_rational(rng), testsup::random_rational(rng)};
    BaryPoint b = t.barycentric(p);
    for (int i = 0; i < 3; ++i) {
      CHECK(rows[i][0] + rows[i][1] * p.x + rows[i][2] * p.y == b.lambda[i]);
      CHECK(grads[i] == Vec2{rows[i][1], rows[i][2]});
    }
  }
}

TEST_CASE("lambda gradients on the unit right triangle") {
  auto g = Triangle::unit_right().lambda_gradients();
  CHECK(g[0] == Vec2{-1, -1});
  CHECK(g[1] == Vec2{1, 0});
  CHECK(g[2] == Vec2{0, 1});
}

TEST_CASE("shrink map fixes its anchor and scales by lambda0") {
  std::mt19937_64 rng(test_seed() + 2);
  for (int trial = 0; trial < 20; ++trial) {
    BaryPoint xi = testsup::random_interior_point(rng);
    CHECK(tau_apply(xi, BaryPoint(1, 0, 0)) == xi);

    Triangle t = testsup::random_triangle(rng);
    AffineMap f = tau_map(t, xi);
    CHECK(f.det() == xi.lambda[0] * xi.lambda[0]);
    BaryPoint mu = testsup::random_bary_point(rng);
    CHECK(f(t.point(mu)) == t.point(tau_apply(xi, mu)));
  }
}

TEST_CASE("shrink map at a frozen anchor") {
  BaryPoint xi = bp(1, 1, 2, 4);  // (1/4, 1/4, 1/2)
  BaryPoint image = tau_apply(xi, bp(2, 1, 1, 4));
  CHECK(image == BaryPoint(ratio(1, 8), ratio(5, 16), ratio(9, 16)));
}

TEST_CASE("principal lattice enumeration") {
  for (int r = 1; r <= 8; ++r) {
    auto pts = principal_lattice(r);
    CHECK((int)pts.size() == (r + 1) * (r + 2) / 2);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(compare(pts[i - 1], pts[i]) > 0);
  }
  auto l2 = principal_lattice(2);
  CHECK(l2[0] == BaryPoint(1, 0, 0));
  CHECK(l2[1] == bp(1, 1, 0, 2));
  CHECK(l2[2] == bp(1, 0, 1, 2));
  CHECK(l2[3] == BaryPoint(0, 1, 0));
  CHECK(l2[4] == bp(0, 1, 1, 2));
  CHECK(l2[5] == BaryPoint(0, 0, 1));
}

TEST_CASE("generator sets at low degree are the published lists") {
  auto g2 = gamma_set(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == BaryPoint(1, 0, 0));

  auto g3 = gamma_set(3);
  REQUIRE(g3.size() == 3);
  CHECK(g3[0] == bp(2, 0, 1, 3));
  CHECK(g3[1] == bp(1, 2, 0, 3));
  CHECK(g3[2] == BaryPoint(1, 0, 0));

  auto g4 = gamma_set(4);
  REQUIRE(g4.size() == 6);
  CHECK(g4[0] == bp(2, 1, 1, 4));
  CHECK(g4[1] == bp(1, 3, 0, 4));
  CHECK(g4[2] == bp(3, 1, 0, 4));
  CHECK(g4[3] == bp(1, 0, 3, 4));
  CHECK(g4[4] == bp(3, 0, 1, 4));
  CHECK(g4[5] == BaryPoint(1, 0, 0));
}

TEST_CASE("generator sets live on the lattice with positive lambda0") {
  for (int r = 2; r <= 10; ++r) {
    auto g = gamma_set(r);
    CHECK((int)g.size() == r * (r - 1) / 2);
    std::set<std::array<Rational, 3>> seen;
    for (const auto& p : g) {
      CHECK(p.lambda[0] > 0);
      CHECK(p.lambda[1] >= 0);
      CHECK(p.lambda[2] >= 0);
      for (int i = 0; i < 3; ++i) {
        Rational scaled = p.lambda[i] * r;
        CHECK(scaled.get_den() == 1);  // lattice membership
      }
      CHECK(seen.insert(p.lambda).second);  // distinct
    }
  }
}

TEST_CASE("zeta parity choice changes the set") {
  auto right = gamma_set(3);
  auto wrong = gamma_wrong_parity(3);
  REQUIRE(wrong.size() == right.size());
  auto key = [](const BaryPoint& p) { return p.lambda; };
  std::set<std::array<Rational, 3>> a, b;
  for (const auto& p : right) a.insert(key(p));
  for (const auto& p : wrong) b.insert(key(p));
  CHECK(a != b);
}

TEST_CASE("poisedness certification") {
  for (int r = 1; r <= 4; ++r) {
    auto rep = certify_poised(principal_lattice(r), r);
    CHECK(rep.poised);
    CHECK(rep.rank == rep.dimension);
  }

  auto pts = principal_lattice(2);
  pts.pop_back();
  CHECK_FALSE(certify_poised(pts, 2).poised);  // not square

  std::vector<BaryPoint> collinear{BaryPoint(1, 0, 0), bp(1, 1, 0, 2), BaryPoint(0, 1, 0)};
  auto rep = certify_poised(collinear, 1);
  CHECK_FALSE(rep.poised);
  CHECK(rep.rank == 2);
  CHECK(rep.dimension == 3);
}

TEST_CASE("family triangle intersection agrees with polygon clipping") {
  auto as_polygon = [](const FamilyTriangle& t) {
    Rational s = t.scale();
    return std::vector<UV>{UV{t.a, t.b}, UV{t.a + s, t.b}, UV{t.a, t.b + s}};
  };
  std::mt19937_64 rng(test_seed() + 3);
  std::uniform_int_distribution<long> num(0, 12);
  int nonempty = 0;
  for (int trial = 0; trial < 100; ++trial) {
    FamilyTriangle s{ratio(num(rng), 16), ratio(num(rng), 16)};
    FamilyTriangle t{ratio(num(rng), 16), ratio(num(rng), 16)};
    if (s.scale() < 0 || t.scale() < 0) continue;
    auto isect = intersect(s, t);
    Rational clipped = convex_intersection_area(as_polygon(s), as_polygon(t));
    if (isect) {
      CHECK(isect->a == std::max(s.a, t.a));
      CHECK(isect->b == std::max(s.b, t.b));
      CHECK(clipped == isect->scale() * isect->scale() / 2);
      if (isect->scale() > 0) ++nonempty;
    } else {
      CHECK(clipped == 0);
    }
  }
  CHECK(nonempty > 10);  // the sample actually exercised the overlap path
}

TEST_CASE("degree 2 has a single cell covering the chart triangle") {
  auto cells = build_cells(2);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].area_uv == ratio(1, 2));
  REQUIRE(cells[0].polygon.size() == 3);
  CHECK(cells[0].polygon[0] == uv(0, 1, 0, 1));
  CHECK(cells[0].polygon[1] == uv(1, 1, 0, 1));
  CHECK(cells[0].polygon[2] == uv(0, 1, 1, 1));
}

TEST_CASE("degree 3 cells are frozen") {
  auto cells = build_cells(3);
  REQUIRE(cells.size() == 3);

  CHECK(cells[0].area_uv == ratio(2, 9));
  REQUIRE(cells[0].polygon.size() == 3);
  CHECK(cells[0].polygon[0] == uv(0, 1, 1, 3));
  CHECK(cells[0].polygon[1] == uv(2, 3, 1, 3));
  CHECK(cells[0].polygon[2] == uv(0, 1, 1, 1));

  CHECK(cells[1].area_uv == ratio(1, 18));
  REQUIRE(cells[1].polygon.size() == 3);
  CHECK(cells[1].polygon[0] == uv(2, 3, 0, 1));
  CHECK(cells[1].polygon[1] == uv(1, 1, 0, 1));
  CHECK(cells[1].polygon[2] == uv(2, 3, 1, 3));

  CHECK(cells[2].area_uv == ratio(2, 9));
  REQUIRE(cells[2].polygon.size() == 4);
  CHECK(cells[2].polygon[0] == uv(0, 1, 0, 1));
  CHECK(cells[2].polygon[1] == uv(2, 3, 0, 1));
  CHECK(cells[2].polygon[2] == uv(2, 3, 1, 3));
  CHECK(cells[2].polygon[3] == uv(0, 1, 1, 3));
}

TEST_CASE("degree 4 cell areas are frozen") {
  auto cells = build_cells(4);
  REQUIRE(cells.size() == 6);
  const long num[] = {4, 1, 4, 1, 4, 2};
  for (int i = 0; i < 6; ++i) CHECK(cells[i].area_uv == ratio(num[i], 32));
}

TEST_CASE("cells pave the chart triangle") {
  for (int r = 2; r <= 8; ++r) {
    auto cells = build_cells(r);
    Rational total = 0;
    for (const auto& c : cells) {
      CHECK(c.area_uv > 0);
      CHECK(shoelace_doubled(c.polygon) == 2 * c.area_uv);
      CHECK(c.contains(UV{c.base.a, c.base.b}));  // own corner
      Rational tri_total = 0;
      for (const auto& t : c.triangulation) {
        Rational d = (t[1].u - t[0].u) * (t[2].v - t[0].v) - (t[2].u - t[0].u) * (t[1].v - t[0].v);
        CHECK(d > 0);
        tri_total += d / 2;
      }
      CHECK(tri_total == c.area_uv);
      total += c.area_uv;
    }
    CHECK(total == ratio(1, 2));
  }
}

TEST_CASE("collapsed inclusion-exclusion matches the exhaustive expansion") {
  for (int r = 2; r <= 6; ++r) {
    auto gamma = gamma_set(r);
    auto cells = build_cells(gamma);
    REQUIRE(cells.size() == gamma.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      CHECK(cells[i].area_uv == exhaustive_cell_area(gamma, i));
      Rational signed_area = 0;
      for (const auto& [t, sign] : cells[i].ie) signed_area += Rational(sign) * t.scale() * t.scale() / 2;
      CHECK(signed_area == cells[i].area_uv);
    }
  }
}

TEST_CASE("cell construction rejects generators off the half-open triangle") {
  CHECK_THROWS(build_cells({BaryPoint(0, 1, 0)}));              // lambda0 == 0
  CHECK_THROWS(build_cells({BaryPoint(ratio(3, 2), ratio(-1, 2), 0)}));  // negative
}

TEST_CASE("containment respects cell boundaries") {
  auto cells = build_cells(3);
  // (1/2, 1/4) sits inside the bottom-left cell only.
  CHECK_FALSE(cells[0].contains(uv(1, 2, 1, 4)));
  CHECK_FALSE(cells[1].contains(uv(1, 2, 1, 4)));
  CHECK(cells[2].contains(uv(1, 2, 1, 4)));
  // The shared corner (2/3, 1/3) lies in every closure.
  CHECK(cells[0].contains(uv(2, 3, 1, 3)));
  CHECK(cells[1].contains(uv(2, 3, 1, 3)));
  CHECK(cells[2].contains(uv(2, 3, 1, 3)));
  CHECK_FALSE(cells[1].contains(uv(1, 3, 1, 6)));  // interior of another cell
}

TEST_CASE("small triangles and lattice edges") {
  auto tris = small_triangles(2);
  CHECK(tris.size() == 3);
  auto edges2 = lattice_edges(2);
  CHECK(edges2.size() == 9);
  CHECK(lattice_edges(3).size() == 18);
  CHECK(lattice_edges(4).size() == 30);

  // Brute-force oracle: all unordered lattice point pairs one unit step
  // apart, counted once.
  auto pts = principal_lattice(2);
  int steps = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      int nonzero = 0;
      bool unit = true;
      for (int c = 0; c < 3; ++c) {
        Rational d = (pts[i].lambda[c] - pts[j].lambda[c]) * 2;
        if (d != 0) ++nonzero;
        if (d != 0 && d != 1 && d != -1) unit = false;
      }
      if (unit && nonzero == 2) ++steps;
    }
  CHECK((int)edges2.size() == steps);

  for (const auto& e : edges2) CHECK(compare(e.p, e.q) > 0);  // canonical orientation
}

TEST_CASE("complex counts and validation") {
  Triangle t = Triangle::unit_right();
  const int expected[][3] = {{6, 6, 1}, {10, 12, 3}, {15, 20, 6}};
  for (int r = 2; r <= 4; ++r) {
    DofComplex c = build_complex(t, r);
    CHECK((int)c.points.size() == expected[r - 2][0]);
    CHECK((int)c.edges.size() == expected[r - 2][1]);
    CHECK((int)c.cells.size() == expected[r - 2][2]);
  }
  for (int r = 2; r <= 6; ++r) {
    ComplexReport rep = validate(build_complex(t, r));
    if (!rep.ok)
      for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
    CHECK(rep.euler == 1);
  }
}

TEST_CASE("boundary of boundary vanishes") {
  DofComplex c = build_complex(Triangle::unit_right(), 3);
  for (std::size_t p = 0; p < c.points.size(); ++p)
    for (std::size_t f = 0; f < c.cells.size(); ++f) {
      int acc = 0;
      for (std::size_t e = 0; e < c.edges.size(); ++e) acc += c.d1[p][e] * c.d2[e][f];
      CHECK(acc == 0);
    }
}

TEST_CASE("boundary matrices have the expected ranks") {
  for (int r = 2; r <= 5; ++r) {
    DofComplex c = build_complex(Triangle::unit_right(), r);
    int np = (int)c.points.size(), ne = (int)c.edges.size();
    RationalMatrix d1((int)c.points.size(), (int)c.edges.size());
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < ne; ++j) d1.at(i, j) = c.d1[i][j];
    RationalMatrix d2(ne, (int)c.cells.size());
    for (int i = 0; i < ne; ++i)
      for (int j = 0; j < (int)c.cells.size(); ++j) d2.at(i, j) = c.d2[i][j];
    CHECK(exact_rank(d1) == np - 1);
    CHECK(exact_rank(d2) == ne - np + 1);
  }
}

TEST_CASE("index lookups") {
  DofComplex c = build_complex(Triangle::unit_right(), 3);
  for (std::size_t i = 0; i < c.points.size(); ++i)
    CHECK(c.point_index(c.points[i]) == (int)i);
  CHECK(c.point_index(bp(3, 1, 1, 5)) == -1);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    CHECK(c.edge_index(c.edges[i].p, c.edges[i].q) == (int)i);
    CHECK(c.edge_index(c.edges[i].q, c.edges[i].p) == (int)i);  // orientation-free
  }
  CHECK(c.edge_index(c.points[0], c.points[0]) == -1);
}

TEST_CASE("partial generator sets fail structural validation") {
  // A single generator at degree 4 leaves most of the triangle uncovered.
  DofComplex c = build_complex(Triangle::unit_right(), 4, {bp(2, 1, 1, 4)});
  ComplexReport rep = validate(c);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("off-lattice cell corners are rejected") {
  // Degree 3 complex fed the degree-4 generator set: corners at quarters.
  CHECK_THROWS(build_complex(Triangle::unit_right(), 3, gamma_set(4)));
}
