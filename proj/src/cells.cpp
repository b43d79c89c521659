#include "triweights/cells.hpp"

#include <algorithm>
#include <stdexcept>

namespace triweights {

bool operator==(const FamilyTriangle& s, const FamilyTriangle& t) {
  return s.a == t.a && s.b == t.b;
}

std::optional<FamilyTriangle> intersect(const FamilyTriangle& s, const FamilyTriangle& t) {
  FamilyTriangle r{std::max(s.a, t.a), std::max(s.b, t.b)};
  if (r.scale() < 0) return std::nullopt;
  return r;
}

bool operator==(const UV& a, const UV& b) { return a.u == b.u && a.v == b.v; }

Rational shoelace_doubled(const std::vector<UV>& polygon) {
  Rational s = 0;
  size_t n = polygon.size();
  for (size_t i = 0; i < n; ++i) {
    const UV& p = polygon[i];
    const UV& q = polygon[(i + 1) % n];
    s += p.u * q.v - p.v * q.u;
  }
  return s;
}

namespace {

Rational cross_uv(const UV& o, const UV& a, const UV& b) {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

void merge_collinear(std::vector<UV>& poly) {
  bool changed = true;
  while (changed && poly.size() > 3) {
    changed = false;
    for (size_t i = 0; i < poly.size(); ++i) {
      const UV& p = poly[(i + poly.size() - 1) % poly.size()];
      const UV& q = poly[i];
      const UV& r = poly[(i + 1) % poly.size()];
      if (cross_uv(p, q, r) == 0) {
        poly.erase(poly.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
}

struct Stairs {
  // Pareto-minimal subtracted quadrants: a strictly ascending, b strictly
  // descending.
  std::vector<FamilyTriangle> q;

  // Cap on v for u just right of the given abscissa (none: only the
  // hypotenuse limits).
  std::optional<Rational> cap_right(const Rational& u) const {
    std::optional<Rational> c;
    for (const auto& s : q)
      if (s.a <= u) c = s.b;
    return c;
  }
  std::optional<Rational> cap_left(const Rational& u) const {
    std::optional<Rational> c;
    for (const auto& s : q)
      if (s.a < u) c = s.b;
    return c;
  }
};

}  // namespace

bool Cell2::contains(const UV& p) const {
  if (p.u < base.a || p.v < base.b || p.u + p.v > 1) return false;
  // Closed region: a quadrant with threshold a_j strictly left of u caps
  // v at b_j; at u == a_j the vertical edge itself still belongs to the cell.
  Rational cap = 1 - p.u;
  for (const auto& [ft, sign] : ie) {
    if (sign != -1) continue;
    if (ft.a < p.u) cap = std::min(cap, ft.b);
  }
  return p.v <= cap;
}

bool Cell2::contains(double u, double v, double pad) const {
  double a1 = to_double(base.a), a2 = to_double(base.b);
  if (u < a1 + pad || v < a2 + pad || u + v > 1 - pad) return false;
  double cap = 1 - u - pad;
  for (const auto& [ft, sign] : ie) {
    if (sign != -1) continue;
    if (to_double(ft.a) < u - pad) cap = std::min(cap, to_double(ft.b) - pad);
  }
  return v <= cap;
}

std::vector<Cell2> build_cells(const std::vector<BaryPoint>& gamma) {
  std::vector<Cell2> cells;
  cells.reserve(gamma.size());
  for (const BaryPoint& xi : gamma) {
    if (xi.lambda[0] <= 0 || xi.lambda[1] < 0 || xi.lambda[2] < 0)
      throw std::invalid_argument("build_cells: generator outside the half-open triangle");

    Cell2 cell{xi};
    const Rational A1 = xi.lambda[1];
    const Rational A2 = xi.lambda[2];
    cell.base = FamilyTriangle{A1, A2};

    // Family triangles of generators strictly closer to the far edge,
    // clipped into the base. Ties in lambda0 are not subtracted; a tied
    // quadrant inside the base would be dominated anyway.
    std::vector<FamilyTriangle> clipped;
    for (const BaryPoint& eta : gamma) {
      if (eta.lambda[0] >= xi.lambda[0]) continue;
      FamilyTriangle s{std::max(eta.lambda[1], A1), std::max(eta.lambda[2], A2)};
      if (s.scale() <= 0) continue;
      clipped.push_back(s);
    }
    std::sort(clipped.begin(), clipped.end(), [](const FamilyTriangle& x, const FamilyTriangle& y) {
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });
    Stairs st;
    for (const auto& s : clipped) {
      if (!st.q.empty() && s.b >= st.q.back().b) continue;  // dominated
      st.q.push_back(s);
    }

    // Collapsed inclusion-exclusion: the subtracted staircase region is
    // the union of the antichain quadrants, and only adjacent quadrants
    // overlap after dominance reduction.
    cell.ie.emplace_back(cell.base, 1);
    for (const auto& s : st.q) cell.ie.emplace_back(s, -1);
    for (size_t j = 0; j + 1 < st.q.size(); ++j) {
      FamilyTriangle inter{st.q[j + 1].a, st.q[j].b};
      if (inter.scale() > 0) cell.ie.emplace_back(inter, 1);
    }

    // Domain end: the hypotenuse, unless the last quadrant reaches the
    // bottom of the base and truncates it early.
    Rational U = 1 - A2;
    if (!st.q.empty() && st.q.back().b == A2) U = st.q.back().a;
    if (U <= A1) throw std::logic_error("build_cells: empty cell");

    std::vector<Rational> breaks{A1, U};
    for (const auto& s : st.q) {
      if (s.a > A1 && s.a < U) breaks.push_back(s.a);
      Rational cross_u = 1 - s.b;  // where the hypotenuse meets this cap
      if (cross_u > A1 && cross_u < U) breaks.push_back(cross_u);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    // Top boundary, left to right. On each interval the top is a single
    // piece: either a flat cap or the hypotenuse.
    std::vector<UV> top;
    auto push_top = [&top](const Rational& u, const Rational& v) {
      UV p{u, v};
      if (top.empty() || !(top.back() == p)) top.push_back(p);
    };
    struct Interval {
      Rational ul, ur, tl, tr;
    };
    std::vector<Interval> intervals;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
      const Rational& ul = breaks[i];
      const Rational& ur = breaks[i + 1];
      auto top_at = [&st](const Rational& u, bool from_right) {
        std::optional<Rational> cap = from_right ? st.cap_right(u) : st.cap_left(u);
        Rational hyp = 1 - u;
        return cap && *cap < hyp ? *cap : hyp;
      };
      intervals.push_back(Interval{ul, ur, top_at(ul, true), top_at(ur, false)});
    }
    for (const Interval& iv : intervals) {
      push_top(iv.ul, iv.tl);
      push_top(iv.ur, iv.tr);
    }

    // Counterclockwise: bottom-left corner, bottom edge, then the top
    // boundary walked right to left; the left edge closes the loop.
    cell.polygon.push_back(UV{A1, A2});
    cell.polygon.push_back(UV{U, A2});
    for (auto it = top.rbegin(); it != top.rend(); ++it)
      if (!(cell.polygon.back() == *it)) cell.polygon.push_back(*it);
    if (cell.polygon.size() > 1 && cell.polygon.back() == cell.polygon.front())
      cell.polygon.pop_back();
    merge_collinear(cell.polygon);
    if (cell.polygon.size() < 3) throw std::logic_error("build_cells: degenerate polygon");

    Rational doubled = shoelace_doubled(cell.polygon);
    if (doubled <= 0) throw std::logic_error("build_cells: polygon not counterclockwise");
    cell.area_uv = doubled / 2;

    Rational ie_area = 0;
    for (const auto& [ft, sign] : cell.ie) {
      Rational s = ft.scale();
      ie_area += Rational(sign) * s * s / 2;
    }
    if (ie_area != cell.area_uv)
      throw std::logic_error("build_cells: inclusion-exclusion and polygon areas disagree");

    for (const Interval& iv : intervals) {
      UV bl{iv.ul, A2}, br{iv.ur, A2}, tr{iv.ur, iv.tr}, tl{iv.ul, iv.tl};
      if (iv.tl <= A2) throw std::logic_error("build_cells: pinched interval");
      if (iv.tr > A2) {
        cell.triangulation.push_back({bl, br, tr});
        cell.triangulation.push_back({bl, tr, tl});
      } else {
        cell.triangulation.push_back({bl, br, tl});
      }
    }

    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<Cell2> build_cells(int r) { return build_cells(gamma_set(r)); }

Rational convex_intersection_area(const std::vector<UV>& p, const std::vector<UV>& q) {
  // A zero-area clip polygon has only zero-length edges, against which
  // every point sits on the boundary and nothing would be clipped.
  if (p.size() < 3 || q.size() < 3) return 0;
  if (shoelace_doubled(p) <= 0 || shoelace_doubled(q) <= 0) return 0;
  std::vector<UV> poly = p;
  for (size_t i = 0; i < q.size() && !poly.empty(); ++i) {
    const UV& a = q[i];
    const UV& b = q[(i + 1) % q.size()];
    std::vector<UV> next;
    for (size_t j = 0; j < poly.size(); ++j) {
      const UV& cur = poly[j];
      const UV& nxt = poly[(j + 1) % poly.size()];
      Rational side_cur = cross_uv(a, b, cur);
      Rational side_nxt = cross_uv(a, b, nxt);
      if (side_cur >= 0) next.push_back(cur);
      if ((side_cur > 0 && side_nxt < 0) || (side_cur < 0 && side_nxt > 0)) {
        Rational t = side_cur / (side_cur - side_nxt);
        next.push_back(UV{cur.u + t * (nxt.u - cur.u), cur.v + t * (nxt.v - cur.v)});
      }
    }
    poly = std::move(next);
  }
  if (poly.size() < 3) return 0;
  Rational doubled = shoelace_doubled(poly);
  return doubled > 0 ? doubled / 2 : Rational(0);
}

}  // namespace triweights
