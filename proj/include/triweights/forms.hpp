#pragma once

#include <array>
#include <vector>

#include "triweights/barypoly.hpp"
#include "triweights/geometry.hpp"
#include "triweights/linalg.hpp"

namespace triweights {

// Polynomial differential form on the plane. Components are barycentric
// polynomials relative to some triangle's coordinates:
//   k=0: c[0];  k=1: c[0] dx + c[1] dy;  k=2: c[0] dx^dy.
struct PolyForm {
  int k = 0;
  std::array<BaryPolynomial, 2> c;

  static PolyForm scalar(const BaryPolynomial& f);
  static PolyForm one_form(const BaryPolynomial& p, const BaryPolynomial& q);
  static PolyForm two_form(const BaryPolynomial& f);
};

bool equal_as_functions(const PolyForm& a, const PolyForm& b);

// Dimension of the weight space at sequence level r: polynomial k-forms
// of degree r - k. Throws unless 0 <= k <= 2 and r >= k.
int space_dim(int r, int k);

// Homogeneous barycentric monomial basis of the degree-d k-forms, in
// descending-lex order; for k=1 the dx block precedes the dy block.
std::vector<PolyForm> monomial_basis(int degree, int k);

// Cartesian monomial basis x^i y^j (degree-major, then descending i),
// written in the triangle's barycentric coordinates. Same block layout.
std::vector<PolyForm> cartesian_basis(int degree, int k, const Triangle& t);

// Exterior derivative; needs the triangle for the lambda gradients.
// Homogeneous input of degree d yields homogeneous output of degree d-1.
PolyForm exterior_derivative(const PolyForm& w, const Triangle& t);

// Matrix of the exterior derivative from monomial_basis(degree, k) to
// monomial_basis(degree-1, k+1): column j holds the coefficients of
// d(basis_j).
RationalMatrix derivative_matrix(int degree, int k, const Triangle& t);

}  // namespace triweights
