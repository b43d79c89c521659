#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "triweights/linalg.hpp"
#include "triweights/weights.hpp"

using namespace triweights;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = testsup::random_rational(rng, 6, 4);
  return m;
}

// Independent oracle: plain rational Gaussian elimination, no Bareiss.
int rank_by_gauss(RationalMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(rank, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("exact rank on frozen matrices") {
  CHECK(exact_rank(RationalMatrix::identity(3)) == 3);
  CHECK(exact_rank(RationalMatrix(4, 5)) == 0);

  RationalMatrix dup(2, 2);
  dup.at(0, 0) = ratio(1, 3);
  dup.at(0, 1) = 2;
  dup.at(1, 0) = ratio(2, 3);
  dup.at(1, 1) = 4;
  CHECK(exact_rank(dup) == 1);

  RationalMatrix hilbert(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) hilbert.at(i, j) = ratio(1, i + j + 1);
  CHECK(exact_rank(hilbert) == 5);
}

TEST_CASE("exact rank agrees with an independent elimination oracle") {
  std::mt19937_64 rng(test_seed());
  for (int trial = 0; trial < 25; ++trial) {
    RationalMatrix a = random_matrix(rng, 6, 6);
    CHECK(exact_rank(a) == rank_by_gauss(a));
    // Product through a thin middle has rank at most the inner size.
    RationalMatrix b = random_matrix(rng, 6, 3);
    RationalMatrix c = random_matrix(rng, 3, 6);
    RationalMatrix product = b * c;
    int r = exact_rank(product);
    CHECK(r <= 3);
    CHECK(r == rank_by_gauss(product));
  }
}

TEST_CASE("rank is invariant under row operations") {
  std::mt19937_64 rng(test_seed() + 7);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix a = random_matrix(rng, 5, 7);
    int r = exact_rank(a);
    RationalMatrix b = a;
    for (int j = 0; j < b.cols(); ++j) {
      std::swap(b.at(0, j), b.at(3, j));
      b.at(2, j) = b.at(2, j) * ratio(3, 2);
      b.at(4, j) += b.at(1, j) * ratio(-5, 3);
    }
    CHECK(exact_rank(b) == r);
    CHECK(exact_rank(a.transpose()) == r);
  }
}

TEST_CASE("solve on a frozen 2x2 system") {
  RationalMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 3;
  std::vector<Rational> x = solve(a, {Rational(5), Rational(10)});
  CHECK(x[0] == 1);
  CHECK(x[1] == 3);
}

TEST_CASE("singular systems throw") {
  RationalMatrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 2;
  a.at(1, 1) = 4;
  RationalLU lu(a);
  CHECK(lu.singular());
  CHECK_THROWS_AS(lu.solve({Rational(1), Rational(1)}), SingularSystem);
}

TEST_CASE("factored solves verify against the original matrix") {
  std::mt19937_64 rng(test_seed() + 11);
  for (int trial = 0; trial < 5; ++trial) {
    RationalMatrix a = random_matrix(rng, 8, 8);
    if (exact_rank(a) < 8) continue;
    RationalLU lu(a);
    for (int rhs_trial = 0; rhs_trial < 4; ++rhs_trial) {
      std::vector<Rational> rhs(8);
      for (auto& v : rhs) v = testsup::random_rational(rng);
      std::vector<Rational> x = lu.solve(rhs);
      for (int i = 0; i < 8; ++i) {
        Rational acc = 0;
        for (int j = 0; j < 8; ++j) acc += a.at(i, j) * x[j];
        CHECK(acc == rhs[i]);
      }
    }
  }
}

TEST_CASE("spectral condition numbers at frozen values") {
  CHECK(cond2(RationalMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-12));

  RationalMatrix d(3, 3);
  d.at(0, 0) = 10;
  d.at(1, 1) = 1;
  d.at(2, 2) = ratio(1, 10);
  CHECK(cond2(d) == doctest::Approx(100.0).epsilon(1e-10));

  RationalMatrix s(2, 2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 1;
  s.at(1, 0) = 1;
  s.at(1, 1) = 1;
  CHECK(std::isinf(cond2(s)));
}

TEST_CASE("degree-1 vertex evaluation system has condition 2+sqrt(3)") {
  // Cartesian basis {1, x, y} evaluated at the three vertices of the unit
  // right triangle; the singular values solve a quadratic exactly.
  RationalMatrix v = lattice_vandermonde(Triangle::unit_right(), 1, Basis::Cartesian);
  CHECK(cond2(v) == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-9));
}
