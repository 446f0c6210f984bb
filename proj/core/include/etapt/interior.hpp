#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "etapt/linear_operator.hpp"

namespace etapt {

namespace detail {
inline void check_buffer(int dim, int buffer) {
  if (buffer < 0 || 2 * buffer >= dim) {
    throw std::invalid_argument("interior: require 0 <= buffer < dim/2");
  }
}
}  // namespace detail

/// Frobenius norm of the top-left (dim-buffer) block, divided by the block
/// dimension.
inline double interior_norm(const Eigen::MatrixXcd& m, int buffer) {
  const int dim = static_cast<int>(m.rows());
  detail::check_buffer(dim, buffer);
  const int k = dim - buffer;
  return m.topLeftCorner(k, k).norm() / static_cast<double>(k);
}

inline double interior_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                int buffer) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("interior_distance: shape mismatch");
  }
  return interior_norm(a - b, buffer);
}

/// Interior distance scaled by the larger interior norm of the operands.
/// Entries of the metric family grow exponentially with the Fock index, so
/// identity residuals are only meaningful relative to the operand scale.
inline double relative_interior_distance(const Eigen::MatrixXcd& a,
                                         const Eigen::MatrixXcd& b, int buffer) {
  const double s = std::max(interior_norm(a, buffer), interior_norm(b, buffer));
  return interior_distance(a, b, buffer) / (1.0 + s);
}

inline double interior_norm(const LinearOperator& a, int buffer) {
  return interior_norm(a.entries(), buffer);
}

inline double interior_distance(const LinearOperator& a, const LinearOperator& b,
                                int buffer) {
  require_same_space(a, b);
  return interior_distance(a.entries(), b.entries(), buffer);
}

inline double relative_interior_distance(const LinearOperator& a, const LinearOperator& b,
                                         int buffer) {
  require_same_space(a, b);
  return relative_interior_distance(a.entries(), b.entries(), buffer);
}

}  // namespace etapt
