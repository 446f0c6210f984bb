#pragma once

#include <Eigen/Dense>
#include <utility>

#include "etapt/fock_space.hpp"
#include "etapt/linear_operator.hpp"

namespace etapt {

/// Antilinear operator represented by its matrix part M; the action on a
/// vector v is M * conj(v).
///
/// Adjoint convention: with <u|v> = u^dag v and the defining relation
/// <u|A^dag v> = <v|A u>, the adjoint of v -> M conj(v) is v -> M^T conj(v).
class AntilinearOperator {
 public:
  AntilinearOperator(FockSpace space, Eigen::MatrixXcd matrix_part)
      : space_(space), m_(std::move(matrix_part)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim()) {
      throw std::invalid_argument("AntilinearOperator: matrix part shape mismatch");
    }
  }

  const FockSpace& space() const noexcept { return space_; }
  const Eigen::MatrixXcd& matrix_part() const noexcept { return m_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    if (v.size() != space_.dim()) {
      throw std::invalid_argument("AntilinearOperator::apply: vector size mismatch");
    }
    return m_ * v.conjugate();
  }

  AntilinearOperator adjoint() const { return {space_, m_.transpose()}; }

 private:
  FockSpace space_;
  Eigen::MatrixXcd m_;
};

/// A1 o A2 acts as M1 conj(M2) v: a linear operator.
inline LinearOperator compose(const AntilinearOperator& a, const AntilinearOperator& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("operator space mismatch");
  return {a.space(), a.matrix_part() * b.matrix_part().conjugate()};
}

/// L o A acts as (L M) conj(v).
inline AntilinearOperator compose(const LinearOperator& l, const AntilinearOperator& a) {
  if (!(l.space() == a.space())) throw std::invalid_argument("operator space mismatch");
  return {a.space(), l.entries() * a.matrix_part()};
}

/// A o L acts as (M conj(L)) conj(v).
inline AntilinearOperator compose(const AntilinearOperator& a, const LinearOperator& l) {
  if (!(l.space() == a.space())) throw std::invalid_argument("operator space mismatch");
  return {a.space(), a.matrix_part() * l.entries().conjugate()};
}

inline AntilinearOperator operator*(Complex s, const AntilinearOperator& a) {
  return {a.space(), s * a.matrix_part()};
}

/// Commutator [L, A] = L o A - A o L of a linear with an antilinear operator;
/// the result is antilinear with matrix part L M - M conj(L).
inline AntilinearOperator commutator(const LinearOperator& l, const AntilinearOperator& a) {
  if (!(l.space() == a.space())) throw std::invalid_argument("operator space mismatch");
  return {a.space(), l.entries() * a.matrix_part() - a.matrix_part() * l.entries().conjugate()};
}

}  // namespace etapt
