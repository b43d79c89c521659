#include "triweights/linalg.hpp"

#include <limits>

namespace triweights {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int exact_rank(const RationalMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Clear denominators row by row (rank-preserving), then run fraction-free
  // Bareiss elimination over the integers: every division below is exact.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) l = lcm(l, m.at(i, j).get_den());
    for (int j = 0; j < cols; ++j) {
      Rational v = m.at(i, j) * Rational(l);
      a[i][j] = v.get_num();
    }
  }
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

RationalLU::RationalLU(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("RationalLU: matrix not square");
  n_ = m.rows();
  perm_.resize(n_);
  lu_.assign(static_cast<size_t>(n_) * n_, Rational(0));
  for (int i = 0; i < n_; ++i) {
    perm_[i] = i;
    for (int j = 0; j < n_; ++j) lu_[static_cast<size_t>(i) * n_ + j] = m.at(i, j);
  }
  auto e = [this](int i, int j) -> Rational& { return lu_[static_cast<size_t>(i) * n_ + j]; };
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int i = col; i < n_; ++i)
      if (e(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      singular_ = true;
      return;
    }
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(e(pivot, j), e(col, j));
      std::swap(perm_[pivot], perm_[col]);
    }
    for (int i = col + 1; i < n_; ++i) {
      if (e(i, col) == 0) continue;
      Rational f = e(i, col) / e(col, col);
      e(i, col) = f;
      for (int j = col + 1; j < n_; ++j) e(i, j) -= f * e(col, j);
    }
  }
}

std::vector<Rational> RationalLU::solve(const std::vector<Rational>& rhs) const {
  if (singular_) throw SingularSystem("RationalLU: singular matrix");
  if (static_cast<int>(rhs.size()) != n_) throw std::invalid_argument("RationalLU: rhs size");
  auto e = [this](int i, int j) -> const Rational& {
    return lu_[static_cast<size_t>(i) * n_ + j];
  };
  std::vector<Rational> y(n_);
  for (int i = 0; i < n_; ++i) {
    Rational s = rhs[perm_[i]];
    for (int j = 0; j < i; ++j) s -= e(i, j) * y[j];
    y[i] = s;
  }
  std::vector<Rational> x(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    Rational s = y[i];
    for (int j = i + 1; j < n_; ++j) s -= e(i, j) * x[j];
    x[i] = s / e(i, i);
  }
  return x;
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
  return RationalLU(m).solve(rhs);
}

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m.at(i, j));
  return out;
}

double cond2(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  double smin = s(s.size() - 1);
  if (smin <= 0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

double cond2(const RationalMatrix& m) { return cond2(to_eigen(m)); }

}  // namespace triweights
