#include "triweights/quadrature.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace triweights {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the
// three-term recurrence, weights come from the first eigenvector rows.
Rule1D golub_welsch(int n, const std::vector<double>& diag, const std::vector<double>& offdiag2,
                    double mu0) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    j(i, i) = diag[i];
    if (i + 1 < n) {
      double b = std::sqrt(offdiag2[i]);
      j(i, i + 1) = b;
      j(i + 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  Rule1D rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.x[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    rule.w[i] = mu0 * v * v;
  }
  return rule;
}

}  // namespace

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  std::vector<double> diag(n, 0.0), off2(n - 1 >= 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) {
    double kk = k;
    off2[k - 1] = kk * kk / ((2 * kk - 1) * (2 * kk + 1));
  }
  Rule1D r = golub_welsch(n, diag, off2, 2.0);
  for (int i = 0; i < n; ++i) {
    r.x[i] = (r.x[i] + 1.0) / 2.0;  // [-1,1] -> [0,1]
    r.w[i] /= 2.0;
  }
  return r;
}

Rule1D gauss_jacobi10(int n) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi10: need at least one node");
  // Weight (1-x)^1 (1+x)^0 on [-1,1].
  const double alpha = 1.0, beta = 0.0;
  std::vector<double> diag(n), off2(n > 1 ? n - 1 : 0);
  double ab = alpha + beta;
  diag[0] = (beta - alpha) / (ab + 2);
  for (int k = 1; k < n; ++k) {
    double den = (2 * k + ab) * (2 * k + ab + 2);
    diag[k] = (beta * beta - alpha * alpha) / den;
  }
  for (int k = 1; k < n; ++k) {
    double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
    double den = (2 * k + ab) * (2 * k + ab) * (2 * k + ab + 1) * (2 * k + ab - 1);
    off2[k - 1] = num / den;
  }
  double mu0 = 2.0;  // integral of (1-x) over [-1,1]
  Rule1D r = golub_welsch(n, diag, off2, mu0);
  for (int i = 0; i < n; ++i) {
    r.x[i] = (r.x[i] + 1.0) / 2.0;
    r.w[i] /= 4.0;  // dx scaling and (1-x) = 2(1-t)
  }
  return r;
}

TriRule triangle_rule(int order) {
  if (order < 1) throw std::invalid_argument("triangle_rule: order must be >= 1");
  int n = (order + 2) / 2;
  Rule1D gx = gauss_jacobi10(n);
  Rule1D gy = gauss_legendre(n);
  TriRule rule;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double x = gx.x[i];
      double y = gy.x[j] * (1.0 - x);
      rule.pts.push_back({x, y});
      rule.w.push_back(gx.w[i] * gy.w[j]);
    }
  return rule;
}

}  // namespace triweights
