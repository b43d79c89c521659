#pragma once

#include <array>
#include <vector>

namespace triweights {

struct Rule1D {
  std::vector<double> x, w;  // nodes and weights on [0, 1]
};

// Gauss-Legendre on [0, 1]; exact for degree <= 2n-1.
Rule1D gauss_legendre(int n);

// Gauss-Jacobi for the weight (1 - x) on [0, 1]; exact for
// int (1-x) p(x) with deg p <= 2n-1. Weights sum to 1/2.
Rule1D gauss_jacobi10(int n);

struct TriRule {
  std::vector<std::array<double, 2>> pts;  // on the unit right triangle
  std::vector<double> w;                   // sum to 1/2 (reference area)
};

// Conical-product rule on the unit right triangle, exact for total
// degree <= order.
TriRule triangle_rule(int order);

}  // namespace triweights
