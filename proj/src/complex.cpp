#include "triweights/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "triweights/linalg.hpp"

namespace triweights {

std::vector<std::array<BaryPoint, 3>> small_triangles(int r) {
  if (r < 1) throw std::invalid_argument("small_triangles: degree must be >= 1");
  std::vector<std::array<BaryPoint, 3>> out;
  for (const MultiIndex& a : indices_of_degree(r - 1)) {
    std::array<BaryPoint, 3> tri = {BaryPoint(ratio(a.e[0] + 1, r), ratio(a.e[1], r), ratio(a.e[2], r)),
                                    BaryPoint(ratio(a.e[0], r), ratio(a.e[1] + 1, r), ratio(a.e[2], r)),
                                    BaryPoint(ratio(a.e[0], r), ratio(a.e[1], r), ratio(a.e[2] + 1, r))};
    out.push_back(tri);
  }
  return out;
}

namespace {

struct PointOrder {
  bool operator()(const BaryPoint& a, const BaryPoint& b) const {
    // Matches the principal_lattice enumeration: descending lex.
    return compare(a, b) > 0;
  }
};

}  // namespace

std::vector<Edge> lattice_edges(int r) {
  if (r < 1) throw std::invalid_argument("lattice_edges: degree must be >= 1");
  std::vector<Edge> out;
  auto maybe = [&](const MultiIndex& a, int from, int to) {
    if (a.e[from] < 1) return;
    MultiIndex b = a;
    b.e[from] -= 1;
    b.e[to] += 1;
    BaryPoint p(ratio(a.e[0], r), ratio(a.e[1], r), ratio(a.e[2], r));
    BaryPoint q(ratio(b.e[0], r), ratio(b.e[1], r), ratio(b.e[2], r));
    if (PointOrder{}(p, q))
      out.push_back(Edge{p, q});
    else
      out.push_back(Edge{q, p});
  };
  for (const MultiIndex& a : indices_of_degree(r)) {
    maybe(a, 0, 1);
    maybe(a, 0, 2);
    maybe(a, 1, 2);
  }
  return out;
}

int DofComplex::point_index(const BaryPoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p, PointOrder{});
  if (it == points.end() || !(*it == p)) return -1;
  return static_cast<int>(it - points.begin());
}

int DofComplex::edge_index(const BaryPoint& p, const BaryPoint& q) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if ((edges[i].p == p && edges[i].q == q) || (edges[i].p == q && edges[i].q == p))
      return static_cast<int>(i);
  return -1;
}

namespace {

// Unit lattice steps along one polygon side; directions must be lattice
// directions, side lengths must be whole numbers of steps.
std::vector<std::pair<BaryPoint, BaryPoint>> side_steps(const UV& c0, const UV& c1, int r) {
  Rational dur = (c1.u - c0.u) * r;
  Rational dvr = (c1.v - c0.v) * r;
  if (dur.get_den() != 1 || dvr.get_den() != 1)
    throw std::logic_error("cell boundary: corner not on the principal lattice");
  long du = dur.get_num().get_si();
  long dv = dvr.get_num().get_si();
  long g = std::gcd(std::abs(du), std::abs(dv));
  if (g == 0) throw std::logic_error("cell boundary: zero-length side");
  long su = du / g, sv = dv / g;
  bool unit = (su == 0 && (sv == 1 || sv == -1)) || (sv == 0 && (su == 1 || su == -1)) ||
              (su == 1 && sv == -1) || (su == -1 && sv == 1);
  if (!unit) throw std::logic_error("cell boundary: side not in a lattice direction");
  std::vector<std::pair<BaryPoint, BaryPoint>> steps;
  for (long t = 0; t < g; ++t) {
    Rational u0 = c0.u + ratio(su * t, r);
    Rational v0 = c0.v + ratio(sv * t, r);
    Rational u1 = c0.u + ratio(su * (t + 1), r);
    Rational v1 = c0.v + ratio(sv * (t + 1), r);
    steps.emplace_back(BaryPoint(1 - u0 - v0, u0, v0), BaryPoint(1 - u1 - v1, u1, v1));
  }
  return steps;
}

}  // namespace

DofComplex build_complex(const Triangle& t, int r) {
  return build_complex(t, r, gamma_set(r));
}

DofComplex build_complex(const Triangle& t, int r, const std::vector<BaryPoint>& gamma) {
  if (r < 2) throw std::invalid_argument("build_complex: level must be >= 2");
  DofComplex c{r, t, principal_lattice(r), {}, build_cells(gamma), {}, {}};

  std::map<std::pair<int, int>, int> edge_of;
  std::vector<std::vector<std::pair<BaryPoint, BaryPoint>>> cell_steps(c.cells.size());
  for (size_t ci = 0; ci < c.cells.size(); ++ci) {
    const auto& poly = c.cells[ci].polygon;
    for (size_t s = 0; s < poly.size(); ++s) {
      auto steps = side_steps(poly[s], poly[(s + 1) % poly.size()], r);
      cell_steps[ci].insert(cell_steps[ci].end(), steps.begin(), steps.end());
    }
  }
  for (const auto& steps : cell_steps)
    for (const auto& [a, b] : steps) {
      int ia = c.point_index(a), ib = c.point_index(b);
      if (ia < 0 || ib < 0) throw std::logic_error("build_complex: step endpoint off the lattice");
      auto key = std::minmax(ia, ib);
      edge_of.emplace(std::pair<int, int>(key.first, key.second), -1);
    }
  for (auto& [key, idx] : edge_of) {
    idx = static_cast<int>(c.edges.size());
    c.edges.push_back(Edge{c.points[key.first], c.points[key.second]});
  }

  c.d1.assign(c.points.size(), std::vector<int>(c.edges.size(), 0));
  for (size_t e = 0; e < c.edges.size(); ++e) {
    c.d1[c.point_index(c.edges[e].p)][e] = -1;
    c.d1[c.point_index(c.edges[e].q)][e] = 1;
  }

  c.d2.assign(c.edges.size(), std::vector<int>(c.cells.size(), 0));
  for (size_t ci = 0; ci < c.cells.size(); ++ci)
    for (const auto& [a, b] : cell_steps[ci]) {
      int ia = c.point_index(a), ib = c.point_index(b);
      auto key = std::minmax(ia, ib);
      int e = edge_of.at({key.first, key.second});
      int sign = (ia == key.first) ? 1 : -1;
      if (c.d2[e][ci] != 0) throw std::logic_error("build_complex: edge repeated on one cell");
      c.d2[e][ci] = sign;
    }
  return c;
}

ComplexReport validate(const DofComplex& c) {
  ComplexReport rep;
  rep.r = c.r;
  rep.n_points = static_cast<int>(c.points.size());
  rep.n_edges = static_cast<int>(c.edges.size());
  rep.n_cells = static_cast<int>(c.cells.size());
  rep.euler = rep.n_points - rep.n_edges + rep.n_cells;
  auto fail = [&rep](const std::string& msg) { rep.failures.push_back(msg); };

  int r = c.r;
  if (rep.n_points != (r + 1) * (r + 2) / 2) fail("point count");
  if (rep.n_edges != r * (r + 1)) fail("edge count");
  if (rep.n_cells != r * (r - 1) / 2) fail("cell count");
  if (rep.euler != 1) fail("euler number");

  Rational total = 0;
  for (const auto& cell : c.cells) {
    if (cell.area_uv <= 0) fail("cell with nonpositive area");
    total += cell.area_uv;
    Rational tri_total = 0;
    for (const auto& tri : cell.triangulation) {
      Rational doubled = (tri[1].u - tri[0].u) * (tri[2].v - tri[0].v) -
                         (tri[1].v - tri[0].v) * (tri[2].u - tri[0].u);
      if (doubled <= 0) fail("triangulation orientation");
      tri_total += doubled / 2;
    }
    if (tri_total != cell.area_uv) fail("triangulation area");
  }
  if (total != ratio(1, 2)) fail("cells do not pave the triangle");

  for (size_t i = 0; i < c.cells.size(); ++i)
    for (size_t j = i + 1; j < c.cells.size(); ++j) {
      Rational overlap = 0;
      for (const auto& ta : c.cells[i].triangulation)
        for (const auto& tb : c.cells[j].triangulation) {
          std::vector<UV> pa(ta.begin(), ta.end()), pb(tb.begin(), tb.end());
          overlap += convex_intersection_area(pa, pb);
        }
      if (overlap != 0) {
        fail("overlapping cell interiors");
        j = c.cells.size();
        i = c.cells.size();
      }
    }

  for (size_t p = 0; p < c.points.size(); ++p)
    for (size_t ci = 0; ci < c.cells.size(); ++ci) {
      long sum = 0;
      for (size_t e = 0; e < c.edges.size(); ++e) sum += c.d1[p][e] * c.d2[e][ci];
      if (sum != 0) {
        fail("boundary of boundary nonzero");
        ci = c.cells.size();
        p = c.points.size();
      }
    }

  for (size_t e = 0; e < c.edges.size(); ++e) {
    int count = 0, sum = 0;
    for (size_t ci = 0; ci < c.cells.size(); ++ci) {
      count += c.d2[e][ci] != 0;
      sum += c.d2[e][ci];
    }
    bool boundary = false;
    for (int axis = 0; axis < 3; ++axis)
      if (c.edges[e].p.lambda[axis] == 0 && c.edges[e].q.lambda[axis] == 0) boundary = true;
    if (boundary ? count != 1 : (count != 2 || sum != 0)) {
      fail("edge incidence");
      break;
    }
  }

  // Discrete derivative ranks: gradient kernel is the constants, and the
  // edge-to-cell derivative is onto.
  RationalMatrix g(rep.n_edges, rep.n_points);
  for (int e = 0; e < rep.n_edges; ++e)
    for (int p = 0; p < rep.n_points; ++p) g.at(e, p) = c.d1[p][e];
  if (exact_rank(g) != rep.n_points - 1) fail("gradient rank");
  RationalMatrix h(rep.n_cells, rep.n_edges);
  for (int ci = 0; ci < rep.n_cells; ++ci)
    for (int e = 0; e < rep.n_edges; ++e) h.at(ci, e) = c.d2[e][ci];
  if (exact_rank(h) != rep.n_edges - rep.n_points + 1) fail("curl rank");

  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace triweights
