#pragma once

#include "etapt/linear_operator.hpp"

namespace etapt {

struct ExpmOptions {
  /// Reject inputs with spectral norm above this cap.
  double norm_cap = 50.0;
  /// Entrywise threshold for taking the Hermitian fast path.
  double hermitian_tol = 1e-13;
};

/// exp(A). Hermitian inputs (detected entrywise) go through a real-eigenvalue
/// spectral decomposition; everything else through scaling-and-squaring with
/// a Pade approximant. Rejects non-finite input and spectral norm > norm_cap.
///
/// The inverse-product defect ||exp(A) exp(-A) - I||_F stays below 1e-10 when
/// the eigenvalue real-part spread of A is at most ~20; for larger spreads it
/// degrades as eps * exp(spread) regardless of algorithm.
LinearOperator matrix_exponential(const LinearOperator& a, const ExpmOptions& opts = {});

}  // namespace etapt
