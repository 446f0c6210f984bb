#include "etapt/model.hpp"

#include <cmath>
#include <stdexcept>

namespace etapt {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_gamma(double gamma) {
  if (!std::isfinite(gamma) || std::abs(gamma) >= kPi / 2 - 1e-6) {
    throw std::invalid_argument("ModelParams: gamma must lie in (-pi/2, pi/2) away from the ends");
  }
}

}  // namespace

ModelParams ModelParams::derived(FockSpace space, TimeProfile omega, double gamma) {
  check_gamma(gamma);
  return {space, std::move(omega), CouplingMode::derived, std::nullopt, gamma};
}

ModelParams ModelParams::with_explicit_coupling(FockSpace space, TimeProfile omega,
                                                TimeProfile g, double gamma) {
  check_gamma(gamma);
  return {space, std::move(omega), CouplingMode::explicit_coupling, std::move(g), gamma};
}

double ModelParams::coupling(double t) const {
  if (mode == CouplingMode::derived) {
    return omega(t) * std::tan(gamma) / 2.0;
  }
  return (*g)(t);
}

double gamma_from_coupling(double omega0, double g0) {
  if (omega0 == 0.0 && g0 == 0.0) {
    throw std::invalid_argument("gamma_from_coupling: omega0 and g0 cannot both vanish");
  }
  if (omega0 == 0.0) {
    return std::copysign(kPi / 2, g0);  // boundary value, outside the metric guard
  }
  return std::atan(2.0 * g0 / omega0);
}

LinearOperator hamiltonian_at(const ModelParams& params, double t) {
  const double om = params.omega(t);
  const double g = params.coupling(t);
  if (!std::isfinite(om) || !std::isfinite(g)) {
    throw std::domain_error("hamiltonian_at: non-finite profile value");
  }
  const auto gen = su11_generators(params.space);
  return om * gen.k0 + Complex(0.0, g) * (gen.kplus + gen.kminus);
}

LinearOperator adjoint_action_rhs(const FockSpace& space, double gamma,
                                  Su11Component which) {
  const auto gen = su11_generators(space);
  const double c2 = std::cos(2.0 * gamma);
  const double s2 = std::sin(2.0 * gamma);
  const double c = std::cos(gamma);
  const double s = std::sin(gamma);
  switch (which) {
    case Su11Component::k0:
      return c2 * gen.k0 + Complex(0.0, -0.5 * s2) * (gen.kplus + gen.kminus);
    case Su11Component::kplus:
      return (c * c) * gen.kplus - (s * s) * gen.kminus + Complex(0.0, -s2) * gen.k0;
    case Su11Component::kminus:
      return (c * c) * gen.kminus - (s * s) * gen.kplus + Complex(0.0, -s2) * gen.k0;
  }
  throw std::logic_error("adjoint_action_rhs: unknown component");
}

LinearOperator transformed_hamiltonian(const ModelParams& params, double t) {
  const double om = params.omega(t);
  const double g = params.coupling(t);
  const double defect = std::abs(om * std::sin(params.gamma) - 2.0 * g * std::cos(params.gamma));
  if (defect > 1e-10) {
    throw std::domain_error(
        "transformed_hamiltonian: constraint Omega sin(gamma) = 2 G cos(gamma) violated");
  }
  const LinearOperator h = hamiltonian_at(params, t);
  const LinearOperator rho = metric(params.space, params.gamma, 0.5);
  const LinearOperator rho_inv = metric(params.space, params.gamma, -0.5);
  return rho * h * rho_inv;
}

}  // namespace etapt
