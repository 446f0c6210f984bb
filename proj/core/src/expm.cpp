#include "etapt/expm.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <stdexcept>

namespace etapt {

LinearOperator matrix_exponential(const LinearOperator& a, const ExpmOptions& opts) {
  const Eigen::MatrixXcd& m = a.entries();
  if (!m.allFinite()) {
    throw std::domain_error("matrix_exponential: non-finite entries");
  }

  const double herm_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect <= opts.hermitian_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()));
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("matrix_exponential: Hermitian eigensolver failed");
    }
    const double radius =
        std::max(std::abs(es.eigenvalues().maxCoeff()), std::abs(es.eigenvalues().minCoeff()));
    if (radius > opts.norm_cap) {
      throw std::domain_error("matrix_exponential: spectral norm exceeds cap");
    }
    Eigen::VectorXd ew = es.eigenvalues().array().exp();
    Eigen::MatrixXcd out =
        es.eigenvectors() * ew.asDiagonal() * es.eigenvectors().adjoint();
    return {a.space(), std::move(out)};
  }

  const double norm2 = m.jacobiSvd().singularValues()(0);
  if (norm2 > opts.norm_cap) {
    throw std::domain_error("matrix_exponential: spectral norm exceeds cap");
  }
  return {a.space(), m.exp()};
}

}  // namespace etapt
