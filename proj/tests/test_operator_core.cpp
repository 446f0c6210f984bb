#include <cmath>
#include <random>

#include "doctest.h"
#include "etapt/antilinear_operator.hpp"
#include "etapt/expm.hpp"
#include "etapt/interior.hpp"
#include "etapt/model.hpp"
#include "etapt/su11.hpp"

using namespace etapt;

namespace {

Eigen::VectorXcd basis(int dim, int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(n) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("FockSpace validates dimension and buffer") {
  CHECK_THROWS_AS(FockSpace(4), std::invalid_argument);
  CHECK_THROWS_AS(FockSpace(7), std::invalid_argument);
  CHECK_THROWS_AS(FockSpace(16, 8), std::invalid_argument);
  CHECK_THROWS_AS(FockSpace(16, -1), std::invalid_argument);
  const FockSpace s(8, 2);
  CHECK(s.dim() == 8);
  CHECK(s.buffer() == 2);
}

TEST_CASE("su11 generators: diagonal, ladder structure, Hermitian pairing") {
  const FockSpace space(8, 2);
  const auto gen = su11_generators(space);

  // K0|3> = 1.75 |3>
  const Eigen::VectorXcd v = gen.k0.apply(basis(8, 3));
  CHECK(std::abs(v(3) - Complex(1.75, 0.0)) < 1e-15);
  for (int i = 0; i < 8; ++i) {
    if (i != 3) CHECK(std::abs(v(i)) == 0.0);
  }

  // K+ - (K-)^dag vanishes entrywise
  CHECK((gen.kplus.entries() - gen.kminus.entries().adjoint()).cwiseAbs().maxCoeff() ==
        0.0);

  // [K-, K+]|0> = -2 K0 |0> = -0.5 |0> (commutator order as acting on |0>)
  const Eigen::VectorXcd w =
      gen.kminus.apply(gen.kplus.apply(basis(8, 0))) -
      gen.kplus.apply(gen.kminus.apply(basis(8, 0)));
  CHECK(std::abs(w(0) - Complex(0.5, 0.0)) < 1e-15);  // K-K+|0> - K+K-|0> = +2K0|0>
  // and therefore [K+, K-]|0> = -2 K0 |0>
  const Eigen::VectorXcd u =
      commutator(gen.kplus, gen.kminus).apply(basis(8, 0));
  CHECK(std::abs(u(0) - Complex(-0.5, 0.0)) < 1e-15);
}

TEST_CASE("commutator identities, exact and truncation-aware") {
  for (int dim : {8, 16, 32, 64}) {
    const FockSpace space(dim, 2);
    const auto gen = su11_generators(space);

    // [K0, K+] = K+ exactly, every entry
    CHECK((commutator(gen.k0, gen.kplus).entries() - gen.kplus.entries())
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // [K+, K-] + 2 K0 vanishes away from the top two states
    const LinearOperator c = commutator(gen.kplus, gen.kminus);
    CHECK(interior_distance(c, -2.0 * gen.k0, 2) < 1e-13);
    CHECK(interior_distance(c, -2.0 * gen.k0, 0) > 0.1);

    // [A, A] = 0
    CHECK(commutator(gen.kplus, gen.kplus).entries().cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("commutator corruption is confined to the top two states") {
  const FockSpace space(8, 2);
  const auto gen = su11_generators(space);
  const Eigen::MatrixXcd defect =
      (commutator(gen.kplus, gen.kminus) + 2.0 * gen.k0).entries();
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (i < 6 && j < 6) {
        CHECK(std::abs(defect(i, j)) < 1e-14);
      }
    }
  }
  CHECK(std::abs(defect(6, 6)) > 1.0);
  CHECK(std::abs(defect(7, 7)) > 1.0);
}

TEST_CASE("discrete symmetries: parity, conjugation, involution") {
  const FockSpace space(8, 2);
  const auto sym = discrete_symmetries(space);

  CHECK(std::abs(sym.parity.apply(basis(8, 5))(5) - Complex(-1.0, 0.0)) == 0.0);
  CHECK(std::abs(sym.parity.apply(basis(8, 4))(4) - Complex(1.0, 0.0)) == 0.0);

  const Eigen::VectorXcd t = sym.time_reversal.apply(Complex(0.0, 1.0) * basis(8, 0));
  CHECK(std::abs(t(0) - Complex(0.0, -1.0)) == 0.0);

  const auto pt = pt_operator(space);
  const LinearOperator ptpt = compose(pt, pt);
  CHECK((ptpt.entries() - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 8; ++k) {
    Eigen::VectorXcd v(8);
    for (int i = 0; i < 8; ++i) {
      v(i) = Complex(static_cast<double>(rng() % 97) / 97.0,
                     static_cast<double>(rng() % 89) / 89.0);
    }
    CHECK((ptpt.apply(v) - v).norm() < 1e-15);
  }
}

TEST_CASE("antilinear adjoint uses the transpose of the matrix part") {
  const FockSpace space(8, 2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(8, 8);
  const AntilinearOperator a(space, m);
  CHECK((a.adjoint().matrix_part() - m.transpose()).cwiseAbs().maxCoeff() == 0.0);

  // defining relation <u|A^dag v> = <v|A u> on random vectors
  std::mt19937_64 rng(17);
  for (int k = 0; k < 16; ++k) {
    Eigen::VectorXcd u(8), v(8);
    for (int i = 0; i < 8; ++i) {
      u(i) = Complex(static_cast<double>(rng() % 101) / 101.0 - 0.5,
                     static_cast<double>(rng() % 103) / 103.0 - 0.5);
      v(i) = Complex(static_cast<double>(rng() % 107) / 107.0 - 0.5,
                     static_cast<double>(rng() % 109) / 109.0 - 0.5);
    }
    const Complex lhs = u.dot(a.adjoint().apply(v));
    const Complex rhs = v.dot(a.apply(u));
    CHECK(std::abs(lhs - rhs) < 1e-14);
  }
}

TEST_CASE("antilinear composition rules") {
  const FockSpace space(8, 2);
  Eigen::MatrixXcd m1 = Eigen::MatrixXcd::Random(8, 8);
  Eigen::MatrixXcd m2 = Eigen::MatrixXcd::Random(8, 8);
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Random(8, 8);
  const AntilinearOperator a1(space, m1), a2(space, m2);
  const LinearOperator lin(space, l);

  CHECK((compose(a1, a2).entries() - m1 * m2.conjugate()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((compose(lin, a1).matrix_part() - l * m1).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((compose(a1, lin).matrix_part() - m1 * l.conjugate()).cwiseAbs().maxCoeff() <
        1e-15);

  Eigen::VectorXcd v = Eigen::VectorXcd::Random(8);
  CHECK((compose(a1, a2).apply(v) - a1.apply(a2.apply(v))).norm() < 1e-14);
  CHECK((compose(lin, a1).apply(v) - lin.apply(a1.apply(v))).norm() < 1e-14);
  CHECK((compose(a1, lin).apply(v) - a1.apply(lin.apply(v))).norm() < 1e-14);
}

TEST_CASE("matrix exponential: fixed points and error paths") {
  const FockSpace space(8, 2);

  CHECK((matrix_exponential(LinearOperator::zero(space)).entries() -
         Eigen::MatrixXcd::Identity(8, 8))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(8, 8);
  d(0, 0) = std::log(2.0);
  const LinearOperator e = matrix_exponential(LinearOperator(space, d));
  CHECK(std::abs(e.entries()(0, 0) - Complex(2.0, 0.0)) < 1e-14);
  CHECK(std::abs(e.entries()(1, 1) - Complex(1.0, 0.0)) < 1e-14);

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(8, 8);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(matrix_exponential(LinearOperator(space, bad)), std::domain_error);

  Eigen::MatrixXcd big = 100.0 * Eigen::MatrixXcd::Identity(8, 8);
  CHECK_THROWS_AS(matrix_exponential(LinearOperator(space, big)), std::domain_error);
}

TEST_CASE("matrix exponential: Hermitian path self-inverse at well-conditioned size") {
  // At dim 16 the truncated generator has spectral radius ~11, so gamma=0.3
  // keeps exp well conditioned; at dim 64 the same product is dominated by
  // eps * exp(2*gamma*radius) and no algorithm can reach 1e-10.
  const FockSpace space(16, 2);
  const auto gen = su11_generators(space);
  const LinearOperator x = Complex(0.0, 0.3) * (gen.kplus - gen.kminus);
  const LinearOperator e = matrix_exponential(x);
  const LinearOperator ei = matrix_exponential(-1.0 * x);
  CHECK(((e * ei).entries() - Eigen::MatrixXcd::Identity(16, 16)).norm() < 1e-10);
}

TEST_CASE("matrix exponential: Pade path keeps exp(A)exp(-A) near identity") {
  std::mt19937_64 rng(99);
  const FockSpace space(32, 2);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXcd a(32, 32);
    for (int i = 0; i < 32; ++i) {
      for (int j = 0; j < 32; ++j) {
        a(i, j) = Complex(static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
                          static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5);
      }
    }
    a *= 10.0 / a.jacobiSvd().singularValues()(0);
    const LinearOperator la(space, a);
    const LinearOperator e = matrix_exponential(la);
    const LinearOperator ei = matrix_exponential(-1.0 * la);
    worst = std::max(
        worst, ((e * ei).entries() - Eigen::MatrixXcd::Identity(32, 32)).norm());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("interior distance: examples and errors") {
  const FockSpace space(32, 2);
  const auto gen = su11_generators(space);

  CHECK(interior_distance(gen.k0, gen.k0, 3) == 0.0);
  CHECK(interior_distance(commutator(gen.kplus, gen.kminus), -2.0 * gen.k0, 2) < 1e-13);
  CHECK(interior_distance(gen.k0, -1.0 * gen.k0, 0) > 0.0);

  CHECK_THROWS_AS(interior_norm(gen.k0, 16), std::invalid_argument);
  CHECK_THROWS_AS(interior_norm(gen.k0, -1), std::invalid_argument);

  const FockSpace other(16, 2);
  const auto gen2 = su11_generators(other);
  CHECK_THROWS_AS(interior_distance(gen.k0, gen2.k0, 2), std::invalid_argument);
}

TEST_CASE("truncation convergence: derived-operator block defect shrinks with buffer") {
  const FockSpace space(64, 8);
  const LinearOperator rho = metric(space, 0.3, 0.5);
  const LinearOperator eta = metric(space, 0.3, 1.0);
  const Eigen::MatrixXcd defect = rho.entries() * rho.entries() - eta.entries();
  const double d2 = interior_norm(defect, 2);
  const double d4 = interior_norm(defect, 4);
  const double d8 = interior_norm(defect, 8);
  CHECK(d4 < d2);
  CHECK(d8 < d4);
}

TEST_CASE("metric block is dimension-independent (doubled-dim oracle)") {
  const FockSpace small(64, 8);
  const FockSpace big(128, 8);
  for (double g : {0.1, 0.3, 0.5}) {
    const Eigen::MatrixXcd a = metric(small, g, 1.0).entries();
    const Eigen::MatrixXcd b = metric(big, g, 1.0).entries().topLeftCorner(64, 64);
    const double scale = a.cwiseAbs().maxCoeff();
    CHECK((a - b).cwiseAbs().maxCoeff() / scale < 1e-13);
  }
}
