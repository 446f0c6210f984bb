#pragma once

#include <optional>

#include "etapt/antilinear_operator.hpp"
#include "etapt/linear_operator.hpp"
#include "etapt/su11.hpp"
#include "etapt/time_profile.hpp"

namespace etapt {

enum class CouplingMode { derived, explicit_coupling };

/// Parameters of H(t) = Omega(t) K0 + i G(t) (K+ + K-) together with the
/// constant metric angle gamma. In derived mode the coupling is
/// G(t) = Omega(t) tan(gamma)/2, which keeps H quasi-Hermitian under the
/// metric exp(i gamma (K+ - K-)) at all times.
struct ModelParams {
  FockSpace space;
  TimeProfile omega;
  CouplingMode mode;
  std::optional<TimeProfile> g;  // explicit mode only
  double gamma;

  static ModelParams derived(FockSpace space, TimeProfile omega, double gamma);
  static ModelParams with_explicit_coupling(FockSpace space, TimeProfile omega,
                                            TimeProfile g, double gamma);

  double coupling(double t) const;
};

/// Unique gamma in (-pi/2, pi/2) with Omega0 = 2 G0 cot(gamma); the boundary
/// +-pi/2 is returned for Omega0 = 0, and (0,0) is rejected.
double gamma_from_coupling(double omega0, double g0);

LinearOperator hamiltonian_at(const ModelParams& params, double t);

/// Truncated block of exp(i scale gamma (K+ - K-)) of the untruncated
/// operator, built by the ladder recurrence
///   sqrt(n+1) eta|n+1> = (cos(theta) a^dag - i sin(theta) a) eta|n>
/// seeded with the squeezed-vacuum column, run on 2*dim working rows so that
/// every retained entry is exact. scale = 1 gives the metric eta, -1 its
/// inverse, 1/2 the Dyson factor rho. Result is symmetrized (exactly
/// Hermitian, positive definite).
LinearOperator metric(const FockSpace& space, double gamma, double scale = 1.0);

enum class DisentangledCoefficients {
  /// v = i tan(gamma), v0 = sec^2(gamma), K- coefficient conj(v): reproduces
  /// the entangled exponential exactly.
  trigonometric,
  /// nu = i tanh(gamma), v0 = 1 + ln|nu|^2, K- coefficient -conj(nu): does
  /// not reproduce the exponential; kept as a diagnostic reference route.
  hyperbolic,
};

/// Normal-ordered product exp(c+ K+) exp(ln(v0) K0) exp(c- K-); the
/// trigonometric coefficients make it equal to metric(space, gamma) up to
/// rounding. Built factor-by-factor with exact banded entries.
LinearOperator disentangled_metric(
    const FockSpace& space, double gamma,
    DisentangledCoefficients coeffs = DisentangledCoefficients::trigonometric);

/// Antilinear symmetry PT o eta; matrix part P conj(eta) = P eta^{-1}.
AntilinearOperator eta_tilde(const FockSpace& space, double gamma);

enum class Su11Component { k0, kplus, kminus };

/// Closed form of eta K eta^{-1}:
///   K0 -> K0 cos(2g) - (i/2) sin(2g) (K+ + K-)
///   K+ -> K+ cos^2 g - K- sin^2 g - i K0 sin(2g)
///   K- -> K- cos^2 g - K+ sin^2 g - i K0 sin(2g)
LinearOperator adjoint_action_rhs(const FockSpace& space, double gamma,
                                  Su11Component which);

/// rho H(t) rho^{-1} as a block product. Requires the derived-mode constraint
/// |Omega sin(gamma) - 2 G cos(gamma)| <= 1e-10 at t; on the low Fock block it
/// equals [Omega cos(gamma) + 2 G sin(gamma)] K0 = sqrt(Omega^2 + 4 G^2) K0.
LinearOperator transformed_hamiltonian(const ModelParams& params, double t);

}  // namespace etapt
