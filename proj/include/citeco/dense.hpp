#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace citeco {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

/// Gram matrix of unit-length rows, forced exactly symmetric with unit diagonal and entries in [-1, 1].
template <typename Derived>
DenseMatrix<typename Derived::Scalar> unit_row_gram(const Eigen::MatrixBase<Derived>& unit_rows) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = unit_rows.rows();
  DenseMatrix<Scalar> g(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    g(a, a) = Scalar(1);
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const Scalar v = std::clamp(unit_rows.row(a).dot(unit_rows.row(b)), Scalar(-1), Scalar(1));
      g(a, b) = v;
      g(b, a) = v;
    }
  }
  return g;
}

}  // namespace detail
}  // namespace citeco
