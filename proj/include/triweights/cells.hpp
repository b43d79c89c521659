#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "triweights/geometry.hpp"

namespace triweights {

// The family of triangles similar to T obtained by shrinking toward the
// edge opposite vertex 0. In the (u, v) = (lambda1, lambda2) chart a
// member is {u >= a, v >= b, u + v <= 1}; scale() is its side fraction
// and scale()^2 its area fraction. scale() == 0 is a degenerate point.
struct FamilyTriangle {
  Rational a, b;

  Rational scale() const { return 1 - a - b; }
};

bool operator==(const FamilyTriangle& s, const FamilyTriangle& t);

// Closed under intersection: thresholds max out componentwise. Empty
// (nullopt) exactly when the maxed thresholds overshoot the hypotenuse.
std::optional<FamilyTriangle> intersect(const FamilyTriangle& s, const FamilyTriangle& t);

struct UV {
  Rational u, v;
};

bool operator==(const UV& a, const UV& b);

// One 2-cell of the partition: the generator's family triangle minus the
// family triangles of every generator with strictly smaller lambda0.
struct Cell2 {
  BaryPoint xi;
  FamilyTriangle base{0, 0};

  // Collapsed inclusion-exclusion: base with sign +1, each Pareto-minimal
  // subtracted triangle with -1, each adjacent-pair intersection with +1.
  // Integrating any polynomial against these signed triangles gives the
  // integral over the cell exactly.
  std::vector<std::pair<FamilyTriangle, int>> ie;

  // Counterclockwise boundary in the chart; corners lie on the principal
  // lattice of the construction degree.
  std::vector<UV> polygon;

  // Chart area: shoelace(polygon)/2, validated against the signed sum of
  // scale()^2/2 over `ie` at build time.
  Rational area_uv;

  // Exact disjoint cover of the cell by chart triangles (for quadrature
  // and sampling).
  std::vector<std::array<UV, 3>> triangulation;

  bool contains(const UV& p) const;
  bool contains(double u, double v, double pad = 0.0) const;
};

std::vector<Cell2> build_cells(int r);
std::vector<Cell2> build_cells(const std::vector<BaryPoint>& gamma);

Rational shoelace_doubled(const std::vector<UV>& polygon);

// Intersection area of two convex chart polygons (counterclockwise), by
// successive half-plane clipping. Cells themselves are not convex; to
// certify disjoint interiors, clip their triangulations pairwise.
Rational convex_intersection_area(const std::vector<UV>& p, const std::vector<UV>& q);

}  // namespace triweights
