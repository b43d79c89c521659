#pragma once

#include <string>
#include <vector>

#include "triweights/weights.hpp"

namespace triweights {

// Weight-matching interpolant onto level-r polynomial k-forms: the unique
// form of degree r-k sharing every weight with the target. Reproduces
// polynomial targets of degree <= r-k exactly.
PolyForm interpolate(const PolyForm& target, const DofComplex& c);

// Numeric interpolant of sampled data; coefficients in the
// monomial_basis(r-k, k) order. exponents/lam are evaluation caches
// filled by the constructors.
struct Interpolant {
  int k = 0;
  int degree = 0;
  Triangle tri;
  std::vector<double> coeffs;
  std::vector<MultiIndex> exponents;
  std::array<std::array<double, 3>, 3> lam{};  // lambda_i = lam[i][0] + lam[i][1] x + lam[i][2] y

  double eval_scalar(double x, double y) const;                 // k == 0
  std::array<double, 2> eval_vector(double x, double y) const;  // k == 1
};

Interpolant interpolate(const ScalarField& f, const DofComplex& c, int order = 20);
Interpolant interpolate(const VectorField& f, const DofComplex& c, int order = 20);

// Degree-1 scalar interpolation needs no cell complex: evaluation at the
// three vertices determines the affine interpolant.
Interpolant interpolate_affine(const ScalarField& f, const Triangle& t);

// Weight-level commuting identity for one input: taking weights of the
// exterior derivative equals applying the discrete derivative (transposed
// incidence matrix) to the input's weights. Exact. k of the input must
// be 0 or 1.
bool check_commuting(const PolyForm& omega, const DofComplex& c);
bool check_commuting(const BaryPolynomial& omega0, const DofComplex& c);

// Basis-level form of the same identity: d1^T V0 == V1 D0 and
// d2^T V1 == V2 D1 as exact matrices.
bool commuting_identity(const DofComplex& c);

// Discretization-zero norm estimates: for scalars, max |f| over the
// density-m principal lattice; for vector fields, max over all unit
// lattice edges at density m of the mean tangential integral.
double zero_norm(const ScalarField& f, const Triangle& t, int density);
double zero_norm(const VectorField& f, const Triangle& t, int density, int order = 20);

struct ConvRow {
  int degree = 0;
  int k = 0;
  double residual = 0;
  double reference = 0;
};

// Interpolation error sweep for omega = e^x sin(pi y) and its exterior
// derivative: for each polynomial degree d <= max_degree, the zero-norm
// of (target - interpolant) at level d + k, plus the target's own norm.
std::vector<ConvRow> convergence_experiment(const Triangle& t, int max_degree, int quad_order,
                                            int density);

struct VerifyReport {
  int r = 0;
  ComplexReport complex;
  std::array<int, 3> dims{0, 0, 0};
  std::array<int, 3> ranks{0, 0, 0};
  std::array<bool, 3> unisolvent{false, false, false};
  std::array<double, 3> cond{0, 0, 0};
  bool commuting = false;
  bool ok = false;
};

VerifyReport verify_all(const Triangle& t, int r);
VerifyReport verify_all(const Triangle& t, int r, const std::vector<BaryPoint>& gamma);
std::string to_json(const VerifyReport& rep);

}  // namespace triweights
