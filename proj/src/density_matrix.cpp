#include "spinchain/density_matrix.hpp"

#include <cmath>

#include "spinchain/error.hpp"

namespace spinchain {

DensityMatrix::DensityMatrix(Operator rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols()) throw InvalidInput("density matrix must be square");
  n_sites_ = sites_from_dim(static_cast<std::size_t>(rho_.rows()));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_sites) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites));
  return DensityMatrix(Operator::Identity(dim, dim) / static_cast<double>(dim));
}

StateDiagnostics DensityMatrix::diagnostics() const {
  StateDiagnostics d{};
  d.hermiticity_error = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  d.trace_error = std::abs(rho_.trace() - cplx(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(rho_),
                                             Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

bool DensityMatrix::satisfies(const StateTolerances& tol) const {
  const auto d = diagnostics();
  return d.hermiticity_error <= tol.hermiticity && d.trace_error <= tol.trace &&
         d.min_eigenvalue >= -tol.positivity;
}

Operator hermitian_part(const Operator& m) { return 0.5 * (m + m.adjoint()); }

double trace_distance(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(a - b),
                                             Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

cplx expectation(const Operator& rho, const Operator& op) {
  if (rho.rows() != op.rows() || rho.cols() != op.cols()) {
    throw InvalidInput("expectation: dimension mismatch");
  }
  // tr(rho op) = sum_ij rho_ij op_ji
  return rho.cwiseProduct(op.transpose()).sum();
}

}  // namespace spinchain
