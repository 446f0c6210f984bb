#pragma once

#include <string>

#include "etapt/linear_operator.hpp"
#include "etapt/model.hpp"

namespace etapt {

struct ResidualReport {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // passed <=> value <= tolerance
  std::string note;
};

inline ResidualReport make_report(std::string name, double value, double tolerance,
                                  std::string note = {}) {
  ResidualReport r;
  r.name = std::move(name);
  r.value = value;
  r.tolerance = tolerance;
  r.passed = value <= tolerance;
  r.note = std::move(note);
  return r;
}

/// || PT H PT - H^dag || as a relative interior residual; exactly zero for
/// H = Omega K0 + i G (K+ + K-) with real Omega, G.
ResidualReport pseudo_pt_residual(const LinearOperator& h, double tolerance = 1e-13);

/// Static quasi-Hermiticity defect: relative interior distance between
/// H^dag eta and eta H.
ResidualReport pseudo_hermiticity_residual(const LinearOperator& h,
                                           const LinearOperator& eta,
                                           double tolerance = 1e-9);

/// Defect of d/dt eta_tilde = i [H, eta_tilde] at time t, with the time
/// derivative taken by central difference over dt. Constant gamma makes the
/// derivative vanish exactly and the residual reduces to the commutator
/// defect, compared product-against-product:
/// H M  vs  M conj(H) - i dM/dt,  M = matrix part of eta_tilde.
ResidualReport heisenberg_residual(const ModelParams& params, double t, double dt,
                                   double tolerance = 1e-9);

/// Gauge identity i (d eta/dt) = -gdot (K+ - K-) eta for a time-varying
/// angle profile, central differences on both sides.
ResidualReport gauge_residual(const FockSpace& space, const TimeProfile& gamma_profile,
                              double t, double dt, double tolerance = 1e-6);

}  // namespace etapt
