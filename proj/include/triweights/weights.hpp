#pragma once

#include <functional>
#include <string>
#include <vector>

#include "triweights/complex.hpp"
#include "triweights/forms.hpp"
#include "triweights/linalg.hpp"

namespace triweights {

// The weight of a form against a cell of matching dimension: point
// evaluation, tangential edge integral, or cell area integral. All exact.
Rational weight(const PolyForm& w, const BaryPoint& p, const Triangle& t);
Rational weight(const PolyForm& w, const Edge& e, const Triangle& t);
Rational weight(const PolyForm& w, const Cell2& c, const Triangle& t);

using ScalarField = std::function<double(double, double)>;
using VectorField = std::function<std::array<double, 2>(double, double)>;

// Quadrature counterparts for non-polynomial data.
double weight_numeric(const ScalarField& f, const BaryPoint& p, const Triangle& t);
double weight_numeric(const VectorField& f, const Edge& e, const Triangle& t, int order);
double weight_numeric(const ScalarField& f, const Cell2& c, const Triangle& t, int order);

enum class Basis { Barycentric, Cartesian };

// V[i][j] = weight of basis form j against cell i, rows in the canonical
// cell order of the complex, columns in basis order. Square of size
// space_dim(r, k); full exact rank is the unisolvence certificate.
RationalMatrix vandermonde(const DofComplex& c, int k, Basis basis = Basis::Barycentric);

inline RationalMatrix de_rham_matrix(const DofComplex& c, int k) {
  return vandermonde(c, k, Basis::Barycentric);
}

// Scalar evaluation system on the principal lattice alone; agrees with
// vandermonde(c, 0, basis) whenever the complex exists (the k=0 cells are
// the lattice points), and also covers degree 1 where no complex is built.
RationalMatrix lattice_vandermonde(const Triangle& t, int degree, Basis basis = Basis::Barycentric);

std::vector<std::string> cell_labels(const DofComplex& c, int k);
std::vector<std::string> basis_labels(int degree, int k, Basis basis);

std::string weights_csv(const RationalMatrix& m, const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels);
std::string weights_json(const RationalMatrix& m, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels);

}  // namespace triweights
