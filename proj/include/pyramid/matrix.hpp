#pragma once

#include <Eigen/Dense>
#include <cstdlib>

#include "pyramid/errors.hpp"

namespace pyramid {

using Matrix = Eigen::MatrixXd;
using RowVector = Eigen::RowVectorXd;
using ColVector = Eigen::VectorXd;

// Closed-form inverse of an upper-bidiagonal matrix with diagonal d_0..d_{n-1}
// and superdiagonal f_0..f_{n-2}:
//   inv(k, k+l) = (-1)^l * f_k...f_{k+l-1} / (d_k...d_{k+l})
// O(n^2), exact up to the stated products; no elimination involved.
inline Matrix invert_upper_bidiagonal(const ColVector& diag, const ColVector& super) {
  const Eigen::Index n = diag.size();
  if (super.size() != n - 1 && !(n == 1 && super.size() == 0))
    throw std::invalid_argument("invert_upper_bidiagonal: superdiagonal must have n-1 entries");
  for (Eigen::Index k = 0; k < n; ++k)
    if (diag[k] == 0.0) throw ZeroDiagonalError("invert_upper_bidiagonal: zero diagonal entry");

  Matrix inv = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    inv(k, k) = 1.0 / diag[k];
    for (Eigen::Index j = k + 1; j < n; ++j)
      inv(k, j) = -inv(k, j - 1) * super[j - 1] / diag[j];
  }
  return inv;
}

// Spectral radius of an elementwise-nonnegative matrix by power iteration.
inline double spectral_radius_nonnegative(const Matrix& m, double tol = 1e-12,
                                          int max_iter = 10000) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 0.0;
  ColVector v = ColVector::Ones(n);
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    ColVector w = m * v;
    const double norm = w.lpNorm<Eigen::Infinity>();
    if (norm == 0.0) return 0.0;
    w /= norm;
    const double delta = (w - v).lpNorm<Eigen::Infinity>();
    v = w;
    if (std::abs(norm - lambda) <= tol * std::max(1.0, norm) && delta <= 1e-10) return norm;
    lambda = norm;
  }
  return lambda;
}

}  // namespace pyramid
