#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

#include "triweights/rational.hpp"

namespace triweights {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  bool operator==(const RationalMatrix& o) const;

  static RationalMatrix identity(int n);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rank by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int exact_rank(const RationalMatrix& m);

// Exact LU solver for square systems; factors once, solves many.
class RationalLU {
 public:
  explicit RationalLU(const RationalMatrix& m);

  bool singular() const { return singular_; }
  // Throws SingularSystem if the matrix was singular.
  std::vector<Rational> solve(const std::vector<Rational>& rhs) const;

 private:
  int n_ = 0;
  bool singular_ = false;
  std::vector<int> perm_;
  std::vector<Rational> lu_;
};

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs);

Eigen::MatrixXd to_eigen(const RationalMatrix& m);

// Spectral condition number sigma_max / sigma_min; +inf when numerically
// singular (sigma_min == 0).
double cond2(const Eigen::MatrixXd& m);
double cond2(const RationalMatrix& m);

}  // namespace triweights
