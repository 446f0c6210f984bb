#pragma once

#include "etapt/antilinear_operator.hpp"
#include "etapt/linear_operator.hpp"

namespace etapt {

struct Su11Generators {
  LinearOperator k0;
  LinearOperator kplus;
  LinearOperator kminus;
};

/// Bosonic realization on the truncated space: K0 = (a^dag a + 1/2)/2,
/// K+ = (a^dag)^2/2, K- = a^2/2. K0 is real diagonal and K+ = (K-)^dag
/// entrywise.
Su11Generators su11_generators(const FockSpace& space);

struct DiscreteSymmetries {
  LinearOperator parity;            // diag((-1)^n)
  AntilinearOperator time_reversal; // pure conjugation in the Fock basis
};

DiscreteSymmetries discrete_symmetries(const FockSpace& space);

/// PT = parity followed by conjugation; antilinear with matrix part P.
AntilinearOperator pt_operator(const FockSpace& space);

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

}  // namespace etapt
