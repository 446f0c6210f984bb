#include "etapt/su11.hpp"

#include <cmath>

namespace etapt {

Su11Generators su11_generators(const FockSpace& space) {
  const int n = space.dim();
  if (n < 4) {
    throw std::invalid_argument("su11_generators: dim < 4 leaves the generators degenerate");
  }
  Eigen::MatrixXcd k0 = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd kp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    k0(i, i) = 0.5 * i + 0.25;
  }
  // <n+2| K+ |n> = sqrt((n+1)(n+2))/2 from K+ = (a^dag)^2 / 2
  for (int i = 0; i + 2 < n + 1 && i + 2 <= n - 1; ++i) {
    kp(i + 2, i) = 0.5 * std::sqrt(static_cast<double>(i + 1)) *
                   std::sqrt(static_cast<double>(i + 2));
  }
  Eigen::MatrixXcd km = kp.transpose();
  return {LinearOperator(space, std::move(k0)), LinearOperator(space, std::move(kp)),
          LinearOperator(space, std::move(km))};
}

DiscreteSymmetries discrete_symmetries(const FockSpace& space) {
  const int n = space.dim();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    p(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
  }
  return {LinearOperator(space, std::move(p)),
          AntilinearOperator(space, Eigen::MatrixXcd::Identity(n, n))};
}

AntilinearOperator pt_operator(const FockSpace& space) {
  auto sym = discrete_symmetries(space);
  return compose(sym.parity, sym.time_reversal);
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  require_same_space(a, b);
  return {a.space(), a.entries() * b.entries() - b.entries() * a.entries()};
}

}  // namespace etapt
