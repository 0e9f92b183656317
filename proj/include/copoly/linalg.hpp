#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <utility>

namespace copoly {

/// Exact determinant by Gaussian elimination. Pivots on the first nonzero
/// entry of each column, which is only meaningful over an exact field.
template <typename Derived>
typename Derived::Scalar determinant_exact(const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = matrix;
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Scalar f = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Solves A x = b exactly. Throws std::domain_error when A is singular.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1> solve_exact(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve_exact: shape mismatch");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve_exact: singular matrix");
    if (pivot != col) m.row(pivot).swap(m.row(col));
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Scalar f = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c <= n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = m(i, n) / m(i, i);
  return x;
}

}  // namespace copoly
