#pragma once

#include <string>
#include <vector>

#include "triweights/cells.hpp"
#include "triweights/geometry.hpp"

namespace triweights {

// Oriented lattice edge; p precedes q in the lattice enumeration order.
struct Edge {
  BaryPoint p, q;
};

// Small simplices of the degree-r refinement: the homothety copies
// (x + sum alpha_i x_i)/r of the triangle for |alpha| = r-1. Vertices of
// copy alpha are (alpha + e_j)/r.
std::vector<std::array<BaryPoint, 3>> small_triangles(int r);

// All unit lattice segments of the principal lattice of degree r; every
// one is an edge of some small triangle. Count: 3 r (r+1) / 2.
std::vector<Edge> lattice_edges(int r);

// The chain complex the weights act on. F0 = principal lattice points,
// F1 = unit edges lying on cell boundaries (count r(r+1)), F2 = cells
// (count r(r-1)/2). d1 (|F0| x |F1|) and d2 (|F1| x |F2|) are boundary
// incidence matrices: d1 * d2 == 0, and transposes give the discrete
// derivative on weight vectors.
struct DofComplex {
  int r = 0;
  Triangle tri;
  std::vector<BaryPoint> points;
  std::vector<Edge> edges;
  std::vector<Cell2> cells;
  std::vector<std::vector<int>> d1;
  std::vector<std::vector<int>> d2;

  int point_index(const BaryPoint& p) const;  // -1 if absent
  int edge_index(const BaryPoint& p, const BaryPoint& q) const;  // -1 if absent
};

DofComplex build_complex(const Triangle& t, int r);

// Same assembly from a caller-supplied generator set (for certification
// of hand-edited or perturbed configurations). Throws if the resulting
// cell boundaries do not lie on the level-r lattice.
DofComplex build_complex(const Triangle& t, int r, const std::vector<BaryPoint>& gamma);

struct ComplexReport {
  bool ok = false;
  int r = 0;
  int n_points = 0;
  int n_edges = 0;
  int n_cells = 0;
  int euler = 0;
  std::vector<std::string> failures;
};

// Structural certificate: expected counts, Euler number 1, cell areas
// positive and summing exactly to the triangle area, pairwise-disjoint
// cell interiors, every boundary matrix column a cycle (d1 d2 == 0),
// interior edges shared by exactly two cells with opposite sign.
ComplexReport validate(const DofComplex& c);

}  // namespace triweights
