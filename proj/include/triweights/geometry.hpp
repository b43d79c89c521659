#pragma once

#include <array>
#include <vector>

#include "triweights/barypoly.hpp"
#include "triweights/rational.hpp"

namespace triweights {

struct Vec2 {
  Rational x, y;
};

Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator*(const Rational& c, const Vec2& a);
bool operator==(const Vec2& a, const Vec2& b);
Rational cross(const Vec2& a, const Vec2& b);

// Vertices must be in counterclockwise order (positive doubled area);
// the constructor throws otherwise. Keeping orientation fixed here keeps
// every downstream sign convention (cell traversal, Stokes) fixed too.
struct Triangle {
  std::array<Vec2, 3> v;

  Triangle(const Vec2& v0, const Vec2& v1, const Vec2& v2);

  Rational doubled_area() const;
  Rational area() const;

  BaryPoint barycentric(const Vec2& p) const;
  Vec2 point(const BaryPoint& b) const;

  // Coefficients (a_i, b_i, c_i) of lambda_i = a_i + b_i x + c_i y.
  std::array<std::array<Rational, 3>, 3> lambda_coefficients() const;
  std::array<Vec2, 3> lambda_gradients() const;

  static Triangle unit_right();  // (0,0), (1,0), (0,1); lambda1 = x, lambda2 = y
};

struct AffineMap {
  std::array<std::array<Rational, 2>, 2> m;  // row-major linear part
  Vec2 t;

  Vec2 operator()(const Vec2& p) const;
  AffineMap then(const AffineMap& g) const;  // x -> g(this(x))
  Rational det() const;

  static AffineMap identity();
};

bool operator==(const AffineMap& a, const AffineMap& b);

// Barycentric action of the shrinking map anchored at xi:
// lambda(tau(x)) = lambda0(xi) * lambda(x) + (0, lambda1(xi), lambda2(xi)).
// It sends vertex 0 to xi and fixes the direction of the opposite edge.
BaryPoint tau_apply(const BaryPoint& xi, const BaryPoint& mu);

// The same map in Cartesian form on a concrete triangle: scaling by
// lambda0(xi) about the point that tau fixes.
AffineMap tau_map(const Triangle& t, const BaryPoint& xi);

// Principal lattice: points with barycentric coordinates alpha/r,
// enumerated in the descending-lex order of indices_of_degree(r).
std::vector<BaryPoint> principal_lattice(int r);

// Generator set of the degree-r construction, built by the recursion
// Gamma_2 = {vertex 0}, Gamma_r = tau_{zeta_r}(Gamma_{r-1}) + new edge
// points. |Gamma_r| = r(r-1)/2 and Gamma_r lies in the principal lattice.
std::vector<BaryPoint> gamma_set(int r);

struct PoisedReport {
  bool poised = false;
  int rank = 0;
  int dimension = 0;
};

// Whether evaluation at `points` determines polynomials of the given
// degree uniquely: requires |points| == dim P_degree and full exact rank.
PoisedReport certify_poised(const std::vector<BaryPoint>& points, int degree);

}  // namespace triweights
