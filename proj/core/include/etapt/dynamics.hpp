#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "etapt/linear_operator.hpp"
#include "etapt/model.hpp"

namespace etapt {

struct StateVector {
  FockSpace space;
  Eigen::VectorXcd amplitudes;

  StateVector(FockSpace s, Eigen::VectorXcd a);
};

/// Fixed-step classical RK4; dt must be positive and no larger than a tenth
/// of the integration window (zero-length windows are allowed and produce a
/// single-point trajectory).
struct IntegratorConfig {
  double dt = 1e-3;
  double t_end = 5.0;
  double t_start = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  std::vector<double> eta_norms;  // <psi|eta|psi> per step
  std::vector<double> theta;      // accumulated phase per step
};

/// Thrown when the state stops being finite mid-integration; carries the
/// partial trajectory.
struct DivergenceError : std::runtime_error {
  DivergenceError(std::string msg, Trajectory partial)
      : std::runtime_error(std::move(msg)), trajectory(std::move(partial)) {}
  Trajectory trajectory;
};

/// Integrate i dpsi/dt = H(t) psi (hbar = 1) with exact-time Hamiltonian
/// evaluations at the RK4 stage points; records eta-norm and phase at every
/// step.
Trajectory integrate(const ModelParams& params, const StateVector& psi0,
                     const IntegratorConfig& config);

/// Same integrator under an arbitrary Hamiltonian function; eta-norms are
/// recorded when a metric is supplied, the phase column is zero.
Trajectory integrate_under(const std::function<Eigen::MatrixXcd(double)>& h_of_t,
                           const FockSpace& space, const Eigen::VectorXcd& psi0,
                           const IntegratorConfig& config,
                           const LinearOperator* eta = nullptr);

/// Accumulated phase Theta(t) = int_0^t [Omega cos(gamma) + 2 G sin(gamma)];
/// in derived mode this equals int_0^t Omega / cos(gamma).
double phase_integral(const ModelParams& params, double t);

/// Closed-form solution exp(-i k_n Theta(t)) rho^{-1} |n>, k_n = n/2 + 1/4.
/// Derived mode only; n must stay below dim - buffer.
StateVector analytic_state(const ModelParams& params, int n, double t);

/// <psi| eta |phi> (sesquilinear; positive definite for the metric).
Complex eta_inner(const StateVector& psi, const StateVector& phi,
                  const LinearOperator& eta);

/// Indefinite bilinear form sum_n (-1)^n psi_n phi_n.
Complex pt_inner(const StateVector& psi, const StateVector& phi);

/// count lowest-real-part eigenvalues, sorted by real then imaginary part;
/// count may not exceed dim/4.
std::vector<Complex> spectrum(const LinearOperator& h, int count);

/// |<u,v>| / (||u|| ||v||) after zeroing the top `buffer` components.
double fidelity(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, int buffer);

}  // namespace etapt
