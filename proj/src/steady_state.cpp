#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/SVD>

#include "spinchain/error.hpp"
#include "spinchain/liouvillian.hpp"
#include "spinchain/pauli_basis.hpp"

namespace spinchain {

namespace {

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& y) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
  return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

Eigen::VectorXd ascending_singular_values(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  Eigen::VectorXd s = svd.singularValues();
  std::sort(s.data(), s.data() + s.size());
  return s;
}

double estimate_sigma_max(const Eigen::MatrixXd& upper) {
  const auto r = upper.triangularView<Eigen::Upper>();
  Eigen::VectorXd x = Eigen::VectorXd::Ones(upper.cols()).normalized();
  double sigma = 0.0;
  for (int it = 0; it < 40; ++it) {
    Eigen::VectorXd y = r * x;
    x = r.transpose() * y;
    const double norm = x.norm();
    if (norm == 0.0) break;
    sigma = std::sqrt(norm);
    x /= norm;
  }
  return std::max(sigma, upper.colwise().norm().maxCoeff());
}

SmallSingularValues count_full(const Eigen::MatrixXd& upper, double relative_tolerance) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(upper.triangularView<Eigen::Upper>().toDenseMatrix());
  const Eigen::VectorXd& s = svd.singularValues();  // descending
  SmallSingularValues out;
  out.sigma_max = s.size() ? s(0) : 0.0;
  out.threshold = relative_tolerance * out.sigma_max;
  out.count = static_cast<int>((s.array() < out.threshold).count());
  const Eigen::Index k = std::min<Eigen::Index>(4, s.size());
  out.lowest = s.tail(k).reverse();
  return out;
}

// Block inverse subspace iteration on (R^T R)^{-1}. Ritz values of R on an
// orthonormal block are upper bounds of the smallest singular values.
SmallSingularValues count_partial(const Eigen::MatrixXd& upper, double relative_tolerance) {
  const Eigen::Index n = upper.rows();
  SmallSingularValues out;
  out.sigma_max = estimate_sigma_max(upper);
  out.threshold = relative_tolerance * out.sigma_max;

  // Perturbation of at most 1e-14 sigma_max keeps zero pivots solvable and
  // moves no singular value across the threshold.
  Eigen::MatrixXd r = upper.triangularView<Eigen::Upper>();
  const double floor = 1e-14 * out.sigma_max;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(r(i, i)) < floor) r(i, i) = r(i, i) < 0 ? -floor : floor;
  }

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  for (Eigen::Index block = std::min<Eigen::Index>(4, n);; block = std::min(n, 2 * block)) {
    Eigen::MatrixXd y(n, block);
    for (Eigen::Index i = 0; i < y.size(); ++i) y.data()[i] = normal(rng);
    y = orthonormal_columns(y);
    Eigen::VectorXd ritz = Eigen::VectorXd::Constant(block, out.sigma_max);
    for (int it = 1; it <= 500; ++it) {
      r.transpose().triangularView<Eigen::Lower>().solveInPlace(y);
      r.triangularView<Eigen::Upper>().solveInPlace(y);
      y = orthonormal_columns(y);
      const Eigen::VectorXd next = ascending_singular_values(r.triangularView<Eigen::Upper>() * y);
      const double change =
          ((next - ritz).array().abs() / next.array().max(out.threshold)).maxCoeff();
      ritz = next;
      if (it >= 3 && change < 1e-6) break;
      if (it >= 6 && ritz(0) > 1e4 * out.threshold) break;
    }
    out.count = static_cast<int>((ritz.array() < out.threshold).count());
    out.lowest = ritz;
    if (out.count < block || block == n) return out;
    if (block >= 64) return count_full(upper, relative_tolerance);
  }
}

}  // namespace

SmallSingularValues count_small_singular_values(const Eigen::MatrixXd& upper,
                                                double relative_tolerance,
                                                SpectrumMethod method) {
  if (upper.rows() != upper.cols()) throw InvalidInput("expected a square triangular factor");
  if (!(relative_tolerance > 0.0)) throw InvalidInput("rank tolerance must be positive");
  if (upper.rows() == 0) return {};
  return method == SpectrumMethod::Full ? count_full(upper, relative_tolerance)
                                        : count_partial(upper, relative_tolerance);
}

Operator clip_to_state(const Operator& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(rho));
  Eigen::VectorXd w = es.eigenvalues();
  if (w.minCoeff() < -tol) {
    throw ConsistencyError("steady state has eigenvalue " + std::to_string(w.minCoeff()) +
                           " below -" + std::to_string(tol));
  }
  if (w.minCoeff() >= 0.0) {
    Operator out = hermitian_part(rho);
    return out / out.trace().real();
  }
  w = w.cwiseMax(0.0);
  Operator out = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
  out = hermitian_part(out);
  return out / out.trace().real();
}

SteadyStateResult steady_state(const Operator& h, std::span<const JumpOperator> jumps,
                               const SolverOptions& options) {
  const int n = sites_from_dim(static_cast<std::size_t>(h.rows()));
  if (n > kMaxSuperoperatorSites) {
    throw CapacityError("dense steady-state solve limited to N <= " +
                        std::to_string(kMaxSuperoperatorSites) + " sites, got " +
                        std::to_string(n));
  }
  if (!(options.rank_tolerance > 0) || !(options.residual_tolerance > 0)) {
    throw InvalidInput("solver tolerances must be positive");
  }

  const Eigen::SparseMatrix<double> g = pauli_basis::generator(h, jumps);
  const Eigen::Index size = g.rows();

  // Row 0 of G is identically zero (trace preservation); the kernel of G is
  // the orthogonal complement of the row space of the remaining rows.
  Eigen::MatrixXd rows_t = Eigen::MatrixXd::Zero(size, size - 1);
  for (Eigen::Index col = 0; col < g.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(g, col); it; ++it) {
      if (it.row() > 0) rows_t(col, it.row() - 1) = it.value();
    }
  }
  Eigen::VectorXd h_coeffs(size - 1);
  kernels::active().householder_qr(rows_t.data(), rows_t.rows(), rows_t.cols(),
                                   h_coeffs.data());
  Eigen::VectorXd kernel = Eigen::VectorXd::Unit(size, size - 1);
  kernel.applyOnTheLeft(Eigen::HouseholderSequence<Eigen::MatrixXd, Eigen::VectorXd>(
      rows_t, h_coeffs));

  const Eigen::MatrixXd upper =
      rows_t.topLeftCorner(size - 1, size - 1).triangularView<Eigen::Upper>();
  const auto method = size - 1 <= options.full_spectrum_limit ? SpectrumMethod::Full
                                                              : SpectrumMethod::Partial;
  const auto spectrum = count_small_singular_values(upper, options.rank_tolerance, method);
  const int nullity = 1 + spectrum.count;
  if (nullity != 1) {
    throw DegeneracyError("steady state is not unique: generator kernel has dimension " +
                              std::to_string(nullity),
                          nullity);
  }
  if (std::abs(kernel(0)) < 1e-8) {
    throw ConsistencyError("generator kernel vector is traceless");
  }
  kernel /= kernel(0);

  Operator rho = pauli_basis::state_from_coefficients(kernel, n);
  rho = clip_to_state(rho, options.positivity_tolerance);

  SteadyStateResult result{DensityMatrix(rho), 0.0, nullity, SolveMethod::Nullspace};
  result.residual = apply_generator(h, jumps, result.state.matrix()).norm();
  const double bound = options.residual_tolerance * std::max(1.0, h.norm());
  if (result.residual > bound) {
    throw ConvergenceError("steady-state residual " + std::to_string(result.residual) +
                           " exceeds " + std::to_string(bound));
  }
  return result;
}

}  // namespace spinchain
