#include <cmath>
#include <complex>
#include <stdexcept>

#include "etapt/model.hpp"
#include "etapt/su11.hpp"

namespace etapt {

namespace {

constexpr double kAngleGuard = 1.5707963267948966 - 1e-6;  // pi/2 - 1e-6

void check_angle(double theta) {
  if (!(std::abs(theta) < kAngleGuard)) {
    throw std::domain_error("metric: |scale * gamma| must stay below pi/2 - 1e-6");
  }
}

// exp(c K+) is banded lower-triangular in steps of two:
// <n+2j| exp(c K+) |n> = prod_{i=1..j} (c/2) sqrt((n+2i-1)(n+2i)) / i.
Eigen::MatrixXcd exp_kplus(int dim, Complex c) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    Complex acc = 1.0;
    out(n, n) = 1.0;
    for (int j = 1; n + 2 * j < dim; ++j) {
      const double top = static_cast<double>(n + 2 * j);
      acc *= (c / 2.0) * std::sqrt((top - 1.0) * top) / static_cast<double>(j);
      out(n + 2 * j, n) = acc;
    }
  }
  return out;
}

// exp(c K-) is the mirrored upper-triangular band.
Eigen::MatrixXcd exp_kminus(int dim, Complex c) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    Complex acc = 1.0;
    out(n, n) = 1.0;
    for (int j = 1; n - 2 * j >= 0; ++j) {
      const double bottom = static_cast<double>(n - 2 * j);
      acc *= (c / 2.0) * std::sqrt((bottom + 1.0) * (bottom + 2.0)) / static_cast<double>(j);
      out(n - 2 * j, n) = acc;
    }
  }
  return out;
}

}  // namespace

LinearOperator metric(const FockSpace& space, double gamma, double scale) {
  const double theta = scale * gamma;
  check_angle(theta);
  const int dim = space.dim();
  const int work = 2 * dim;  // every retained entry is then cutoff-exact

  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const Complex v = Complex(0.0, std::tan(theta));

  Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(work, dim);

  // squeezed-vacuum column: <2j|eta|0> = sec^{1/2} prod (v/2) sqrt((2i-1)2i)/i
  Complex acc = std::sqrt(1.0 / ct);
  cols(0, 0) = acc;
  for (int j = 1; 2 * j < work; ++j) {
    acc *= (v / 2.0) * std::sqrt((2.0 * j - 1.0) * (2.0 * j)) / static_cast<double>(j);
    cols(2 * j, 0) = acc;
  }

  // sqrt(n+1) eta|n+1> = (cos a^dag - i sin a) eta|n>
  Eigen::VectorXcd up(work), dn(work);
  for (int n = 0; n + 1 < dim; ++n) {
    const auto g = cols.col(n);
    up(0) = 0.0;
    for (int m = 1; m < work; ++m) up(m) = std::sqrt(static_cast<double>(m)) * g(m - 1);
    for (int m = 0; m + 1 < work; ++m) dn(m) = std::sqrt(static_cast<double>(m + 1)) * g(m + 1);
    dn(work - 1) = 0.0;
    cols.col(n + 1) =
        (ct * up - Complex(0.0, st) * dn) / std::sqrt(static_cast<double>(n + 1));
  }

  Eigen::MatrixXcd block = cols.topRows(dim);
  if (!block.allFinite()) {
    throw std::domain_error("metric: entries overflow double range at this (dim, gamma)");
  }
  Eigen::MatrixXcd sym = 0.5 * (block + block.adjoint());
  return {space, std::move(sym)};
}

LinearOperator disentangled_metric(const FockSpace& space, double gamma,
                                   DisentangledCoefficients coeffs) {
  check_angle(gamma);
  const int dim = space.dim();

  Complex cplus, cminus, logv0;
  if (coeffs == DisentangledCoefficients::trigonometric) {
    const double tg = std::tan(gamma);
    cplus = Complex(0.0, tg);
    cminus = std::conj(cplus);
    const double sec2 = 1.0 / (std::cos(gamma) * std::cos(gamma));
    logv0 = std::log(Complex(sec2, 0.0));
  } else {
    const double th = std::tanh(gamma);
    cplus = Complex(0.0, th);
    cminus = -std::conj(cplus);
    // 1 + ln|nu|^2 goes negative for small angles; take the principal log.
    const double v0 = 1.0 + std::log(th * th);
    logv0 = std::log(Complex(v0, 0.0));
  }

  Eigen::MatrixXcd mid = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    mid(n, n) = std::exp(logv0 * (0.5 * n + 0.25));
  }

  Eigen::MatrixXcd out = exp_kplus(dim, cplus) * (mid * exp_kminus(dim, cminus));
  if (!out.allFinite()) {
    throw std::domain_error("disentangled_metric: entries overflow double range");
  }
  return {space, std::move(out)};
}

AntilinearOperator eta_tilde(const FockSpace& space, double gamma) {
  const LinearOperator eta = metric(space, gamma, 1.0);
  const auto pt = pt_operator(space);
  return compose(pt, eta);
}

}  // namespace etapt
