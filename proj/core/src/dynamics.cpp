#include "etapt/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace etapt {

StateVector::StateVector(FockSpace s, Eigen::VectorXcd a)
    : space(s), amplitudes(std::move(a)) {
  if (amplitudes.size() != space.dim()) {
    throw std::invalid_argument("StateVector: amplitude count does not match space");
  }
  if (!amplitudes.allFinite()) {
    throw std::invalid_argument("StateVector: non-finite amplitudes");
  }
}

namespace {

void check_config(const IntegratorConfig& c) {
  const double span = c.t_end - c.t_start;
  if (span < 0.0) {
    throw std::invalid_argument("IntegratorConfig: t_end must not precede t_start");
  }
  if (span == 0.0) return;  // single-point trajectory
  if (!(c.dt > 0.0)) {
    throw std::invalid_argument("IntegratorConfig: dt must be positive");
  }
  if (c.dt < 1e-12 * std::max(1.0, std::abs(c.t_end))) {
    throw std::invalid_argument("IntegratorConfig: step underflow");
  }
  if (c.dt > span / 10.0) {
    throw std::invalid_argument("IntegratorConfig: dt must not exceed (t_end - t_start)/10");
  }
}

}  // namespace

Trajectory integrate_under(const std::function<Eigen::MatrixXcd(double)>& h_of_t,
                           const FockSpace& space, const Eigen::VectorXcd& psi0,
                           const IntegratorConfig& config, const LinearOperator* eta) {
  check_config(config);
  if (psi0.size() != space.dim()) {
    throw std::invalid_argument("integrate: initial state size mismatch");
  }

  const auto record_eta = [&](const Eigen::VectorXcd& v) -> double {
    if (eta == nullptr) return 0.0;
    return (v.adjoint() * eta->entries() * v)(0).real();
  };

  Trajectory traj;
  traj.times.push_back(config.t_start);
  traj.states.push_back(psi0);
  traj.eta_norms.push_back(record_eta(psi0));
  traj.theta.push_back(0.0);

  const double span = config.t_end - config.t_start;
  if (span == 0.0) return traj;

  const long long steps = static_cast<long long>(std::llround(span / config.dt));
  const bool exact = std::abs(steps * config.dt - span) <= 1e-9 * std::max(1.0, span);
  const long long full_steps = exact ? steps : static_cast<long long>(span / config.dt);

  Eigen::VectorXcd psi = psi0;
  const Complex mi(0.0, -1.0);
  double t = config.t_start;

  const auto rk4_step = [&](double t0, double h) {
    const Eigen::VectorXcd k1 = mi * (h_of_t(t0) * psi);
    const Eigen::MatrixXcd hm = h_of_t(t0 + 0.5 * h);
    const Eigen::VectorXcd k2 = mi * (hm * (psi + 0.5 * h * k1));
    const Eigen::VectorXcd k3 = mi * (hm * (psi + 0.5 * h * k2));
    const Eigen::VectorXcd k4 = mi * (h_of_t(t0 + h) * (psi + h * k3));
    psi = psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  for (long long k = 0; k < full_steps; ++k) {
    t = config.t_start + static_cast<double>(k) * config.dt;
    rk4_step(t, config.dt);
    const double tk = config.t_start + static_cast<double>(k + 1) * config.dt;
    if (!psi.allFinite()) {
      throw DivergenceError("integrate: state diverged (non-finite) at t = " + std::to_string(tk),
                            std::move(traj));
    }
    traj.times.push_back(tk);
    traj.states.push_back(psi);
    traj.eta_norms.push_back(record_eta(psi));
    traj.theta.push_back(0.0);
  }
  if (!exact) {
    const double t_last = config.t_start + static_cast<double>(full_steps) * config.dt;
    const double rem = config.t_end - t_last;
    if (rem > 1e-12 * std::max(1.0, span)) {
      rk4_step(t_last, rem);
      if (!psi.allFinite()) {
        throw DivergenceError("integrate: state diverged (non-finite) at t_end",
                              std::move(traj));
      }
      traj.times.push_back(config.t_end);
      traj.states.push_back(psi);
      traj.eta_norms.push_back(record_eta(psi));
      traj.theta.push_back(0.0);
    }
  }
  return traj;
}

Trajectory integrate(const ModelParams& params, const StateVector& psi0,
                     const IntegratorConfig& config) {
  if (!(psi0.space == params.space)) {
    throw std::invalid_argument("integrate: state lives on a different space");
  }
  if (psi0.amplitudes.norm() == 0.0) {
    throw std::invalid_argument("integrate: initial state has zero norm");
  }
  const auto gen = su11_generators(params.space);
  const Eigen::MatrixXcd k0 = gen.k0.entries();
  const Eigen::MatrixXcd ks = gen.kplus.entries() + gen.kminus.entries();
  const auto h_of_t = [&](double t) -> Eigen::MatrixXcd {
    return params.omega(t) * k0 + Complex(0.0, params.coupling(t)) * ks;
  };
  const LinearOperator eta = metric(params.space, params.gamma, 1.0);
  Trajectory traj = integrate_under(h_of_t, params.space, psi0.amplitudes, config, &eta);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    traj.theta[i] = phase_integral(params, traj.times[i]);
  }
  return traj;
}

double phase_integral(const ModelParams& params, double t) {
  // Omega cos(g) + 2 G sin(g); in derived mode G = Omega tan(g)/2 makes this
  // Omega / cos(g) without dividing by cos(g) explicitly.
  const double c = std::cos(params.gamma);
  const double s = std::sin(params.gamma);
  const double om_int = params.omega.integral(0.0, t);
  double g_int;
  if (params.mode == CouplingMode::derived) {
    g_int = om_int * std::tan(params.gamma) / 2.0;
  } else {
    g_int = params.g->integral(0.0, t);
  }
  return om_int * c + 2.0 * g_int * s;
}

StateVector analytic_state(const ModelParams& params, int n, double t) {
  if (params.mode != CouplingMode::derived) {
    throw std::invalid_argument("analytic_state: requires derived coupling mode");
  }
  if (n < 0 || n >= params.space.dim() - params.space.buffer()) {
    throw std::invalid_argument("analytic_state: n outside the safe range");
  }
  const LinearOperator rho_inv = metric(params.space, params.gamma, -0.5);
  const double kn = 0.5 * n + 0.25;
  const Complex phase = std::exp(Complex(0.0, -kn * phase_integral(params, t)));
  return {params.space, phase * rho_inv.entries().col(n)};
}

Complex eta_inner(const StateVector& psi, const StateVector& phi,
                  const LinearOperator& eta) {
  if (!(psi.space == phi.space) || !(psi.space == eta.space())) {
    throw std::invalid_argument("eta_inner: space mismatch");
  }
  return (psi.amplitudes.adjoint() * eta.entries() * phi.amplitudes)(0);
}

Complex pt_inner(const StateVector& psi, const StateVector& phi) {
  if (!(psi.space == phi.space)) {
    throw std::invalid_argument("pt_inner: space mismatch");
  }
  Complex acc = 0.0;
  for (int i = 0; i < psi.space.dim(); ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    acc += sign * psi.amplitudes(i) * phi.amplitudes(i);
  }
  return acc;
}

std::vector<Complex> spectrum(const LinearOperator& h, int count) {
  const int dim = h.space().dim();
  if (count < 1 || count > dim / 4) {
    throw std::invalid_argument("spectrum: count must lie in [1, dim/4]");
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h.entries(), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("spectrum: eigensolver failed");
  }
  std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + dim);
  std::sort(ev.begin(), ev.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  ev.resize(count);
  return ev;
}

double fidelity(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, int buffer) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("fidelity: size mismatch");
  }
  const int keep = static_cast<int>(u.size()) - buffer;
  if (keep <= 0) {
    throw std::invalid_argument("fidelity: buffer removes every component");
  }
  const auto uu = u.head(keep);
  const auto vv = v.head(keep);
  const double nu = uu.norm();
  const double nv = vv.norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::abs(uu.dot(vv)) / (nu * nv);
}

}  // namespace etapt
