#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <utility>

#include "etapt/fock_space.hpp"

namespace etapt {

using Complex = std::complex<double>;

/// Dense operator on a truncated Fock space, value semantics throughout.
class LinearOperator {
 public:
  LinearOperator(FockSpace space, Eigen::MatrixXcd entries)
      : space_(space), m_(std::move(entries)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim()) {
      throw std::invalid_argument("LinearOperator: entry shape does not match space");
    }
  }

  static LinearOperator identity(const FockSpace& s) {
    return {s, Eigen::MatrixXcd::Identity(s.dim(), s.dim())};
  }
  static LinearOperator zero(const FockSpace& s) {
    return {s, Eigen::MatrixXcd::Zero(s.dim(), s.dim())};
  }

  const FockSpace& space() const noexcept { return space_; }
  const Eigen::MatrixXcd& entries() const noexcept { return m_; }

  LinearOperator adjoint() const { return {space_, m_.adjoint()}; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    if (v.size() != space_.dim()) {
      throw std::invalid_argument("LinearOperator::apply: vector size mismatch");
    }
    return m_ * v;
  }

 private:
  FockSpace space_;
  Eigen::MatrixXcd m_;
};

inline void require_same_space(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.space() == b.space())) {
    throw std::invalid_argument("operator space mismatch");
  }
}

inline LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  require_same_space(a, b);
  return {a.space(), a.entries() + b.entries()};
}

inline LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  require_same_space(a, b);
  return {a.space(), a.entries() - b.entries()};
}

inline LinearOperator operator-(const LinearOperator& a) {
  return {a.space(), -a.entries()};
}

inline LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  require_same_space(a, b);
  return {a.space(), a.entries() * b.entries()};
}

inline LinearOperator operator*(Complex s, const LinearOperator& a) {
  return {a.space(), s * a.entries()};
}

inline LinearOperator operator*(double s, const LinearOperator& a) {
  return {a.space(), s * a.entries()};
}

}  // namespace etapt
