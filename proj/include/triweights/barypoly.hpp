#pragma once

#include <array>
#include <map>
#include <vector>

#include "triweights/rational.hpp"

namespace triweights {

struct Triangle;
struct AffineMap;

// Exponents of a barycentric monomial lambda0^e0 lambda1^e1 lambda2^e2.
struct MultiIndex {
  std::array<int, 3> e{0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2]; }
  auto operator<=>(const MultiIndex&) const = default;
};

// All multi-indices of the given total degree in descending lexicographic
// order on (e0, e1, e2). This order fixes basis enumeration and lattice
// point numbering everywhere; serialized output depends on it.
std::vector<MultiIndex> indices_of_degree(int degree);

// Point in barycentric coordinates. Entries must sum to 1; they may be
// negative (points outside the closed triangle are legal).
struct BaryPoint {
  std::array<Rational, 3> lambda;

  BaryPoint(Rational l0, Rational l1, Rational l2);
};

// Lexicographic on (lambda0, lambda1, lambda2).
int compare(const BaryPoint& a, const BaryPoint& b);
bool operator==(const BaryPoint& a, const BaryPoint& b);
bool operator<(const BaryPoint& a, const BaryPoint& b);

// Polynomial in (lambda0, lambda1, lambda2) with rational coefficients.
// The representation is not reduced modulo lambda0+lambda1+lambda2 == 1,
// so two different coefficient maps can define the same function on the
// affine plane; equal_as_functions() compares after homogenizing.
class BaryPolynomial {
 public:
  BaryPolynomial() = default;
  explicit BaryPolynomial(const Rational& constant);
  static BaryPolynomial monomial(const MultiIndex& alpha, const Rational& coeff);

  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max term degree; 0 for the zero polynomial

  BaryPolynomial& operator+=(const BaryPolynomial& o);
  BaryPolynomial& operator-=(const BaryPolynomial& o);
  BaryPolynomial operator+(const BaryPolynomial& o) const;
  BaryPolynomial operator-(const BaryPolynomial& o) const;
  BaryPolynomial operator*(const BaryPolynomial& o) const;
  BaryPolynomial operator*(const Rational& c) const;
  bool operator==(const BaryPolynomial& o) const { return terms_ == o.terms_; }

  Rational operator()(const BaryPoint& p) const;
  double eval(const std::array<double, 3>& lambda) const;

  // Formal partial derivative with respect to lambda_i.
  BaryPolynomial dlambda(int i) const;

  // Composition lambda_i <- images[i]; the workhorse behind pullbacks.
  BaryPolynomial substitute(const std::array<BaryPolynomial, 3>& images) const;

  // Multiplies each term by (lambda0+lambda1+lambda2)^(degree - term degree),
  // which does not change the function on the affine plane. Throws if some
  // term already exceeds the target degree.
  BaryPolynomial homogenize(int degree) const;

  void set_coeff(const MultiIndex& alpha, const Rational& c);

 private:
  std::map<MultiIndex, Rational> terms_;
};

bool equal_as_functions(const BaryPolynomial& a, const BaryPolynomial& b);

// Integral over a triangle of area A, via the closed form
// int_T lambda^alpha dA = 2A * a0! a1! a2! / (|alpha|+2)!.
Rational integrate(const BaryPolynomial& p, const Triangle& t);

// Same closed form with 2A == 1, i.e. the integral over the
// (lambda1, lambda2) chart triangle {u, v >= 0, u+v <= 1}.
Rational integrate_chart(const BaryPolynomial& p);

// int_0^1 p(lambda(t)) dt along the segment lambda(t) = (1-t) a + t b.
// The caller supplies the measure (edge length or a Cartesian increment).
Rational integrate_segment(const BaryPolynomial& p, const BaryPoint& a, const BaryPoint& b);

// p composed with the affine map f, expressed again in the barycentric
// coordinates of `domain` (i.e. the pullback f^* p when p lives on the
// image). Exact: affine functions equal their vertex-value interpolants.
BaryPolynomial affine_pullback(const BaryPolynomial& p, const AffineMap& f, const Triangle& domain);

}  // namespace triweights
