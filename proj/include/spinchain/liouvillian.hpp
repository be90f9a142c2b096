#pragma once

// Lindblad generator: matrix-free application, column-stacked superoperator,
// steady-state solve (nullspace) and RK4 time evolution.
//
//   L(rho) = i[rho, H] + sum_k ( L_k rho L_k^dag - {L_k^dag L_k, rho}/2 )

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinchain/density_matrix.hpp"
#include "spinchain/drives.hpp"
#include "spinchain/kernels.hpp"
#include "spinchain/pauli.hpp"

namespace spinchain {

/// Sites supported by the dense column-stacked superoperator (4096^2 at N = 6).
inline constexpr int kMaxSuperoperatorSites = 6;

/// rho <- (op on `site`) * rho, in place.
void apply_local_left(const kernels::KernelTable& k, const LocalOperator& op, int site,
                      int n_sites, Operator& rho);
/// rho <- rho * (op on `site`), in place.
void apply_local_right(const kernels::KernelTable& k, const LocalOperator& op, int site,
                       int n_sites, Operator& rho);

/// Matrix-free generator. Precomputes the effective non-Hermitian
/// Hamiltonian; the recycling terms L rho L^dag go through the kernels.
class LindbladRhs {
 public:
  LindbladRhs(const Operator& h, std::span<const JumpOperator> jumps,
              const kernels::KernelTable& k = kernels::active());

  int n_sites() const { return n_sites_; }
  Eigen::Index dim() const { return h_eff_.rows(); }

  /// out = L(rho); out is resized as needed.
  void apply(const Operator& rho, Operator& out) const;

 private:
  int n_sites_;
  Operator h_eff_;
  std::vector<JumpOperator> jumps_;
  const kernels::KernelTable* kernels_;
  mutable Operator scratch_;
};

Operator apply_generator(const Operator& h, std::span<const JumpOperator> jumps,
                         const Operator& rho);

/// Column-stacked superoperator: M vec(rho) = vec(L(rho)), vec stacking columns.
/// Throws CapacityError above kMaxSuperoperatorSites.
Eigen::MatrixXcd build_superoperator(const Operator& h, std::span<const JumpOperator> jumps);

Eigen::VectorXcd vectorize(const Operator& m);
Operator unvectorize(const Eigen::VectorXcd& v);

/// ||L||_2^2, the rate of one channel.
double channel_rate(const JumpOperator& j);

// ---------------------------------------------------------------------------
// Steady state

enum class SolveMethod { Nullspace, TimeEvolution };

struct SolverOptions {
  /// Singular values below rank_tolerance * sigma_max count as zero.
  double rank_tolerance = 1e-10;
  /// Accept when ||L(rho)||_F <= residual_tolerance * max(1, ||H||_F).
  double residual_tolerance = 1e-10;
  /// Eigenvalues in [-positivity_tolerance, 0) are clipped to zero.
  double positivity_tolerance = 1e-10;
  /// Largest generator dimension counted with a full SVD; above it a
  /// partial (inverse subspace iteration) count is used.
  Eigen::Index full_spectrum_limit = 1024;
};

struct SteadyStateResult {
  DensityMatrix state;
  double residual = 0.0;
  /// Number of generator singular values below the rank tolerance.
  /// Not computed by the time-evolution route.
  std::optional<int> nullspace_dimension;
  SolveMethod method = SolveMethod::Nullspace;
};

/// Unique steady state from the generator kernel. Throws DegeneracyError when
/// the kernel is not one-dimensional, ConvergenceError when the residual
/// exceeds tolerance, ConsistencyError on a clearly non-positive state.
SteadyStateResult steady_state(const Operator& h, std::span<const JumpOperator> jumps,
                               const SolverOptions& options = {});

enum class SpectrumMethod { Full, Partial };

struct SmallSingularValues {
  int count = 0;          // singular values below threshold
  double sigma_max = 0;   // largest singular value (estimate for Partial)
  double threshold = 0;   // relative_tolerance * sigma_max
  Eigen::VectorXd lowest; // smallest few singular values, ascending
};

/// Counts singular values of a square upper-triangular matrix below
/// relative_tolerance * sigma_max.
SmallSingularValues count_small_singular_values(const Eigen::MatrixXd& upper,
                                                double relative_tolerance,
                                                SpectrumMethod method);

/// Hermitize, clip eigenvalues in [-tol, 0) and renormalize. Throws
/// ConsistencyError for eigenvalues below -tol.
Operator clip_to_state(const Operator& rho, double tol);

// ---------------------------------------------------------------------------
// Time evolution

struct EvolutionSettings {
  double t_final;
  double dt;
};

/// dt = 0.01 / ||H||_2, capped at 0.5 / (largest per-site total rate);
/// t_final = 200 / (smallest nonzero channel rate ||L_k||_2^2).
EvolutionSettings default_evolution_settings(const Operator& h,
                                             std::span<const JumpOperator> jumps);

/// Fixed-step RK4 from rho0, re-Hermitizing and renormalizing the trace after
/// each step. Throws StepSizeError on trace drift above 1e-8 or blow-up.
DensityMatrix time_evolve(const Operator& h, std::span<const JumpOperator> jumps,
                          const DensityMatrix& rho0, double t_final, double dt,
                          const kernels::KernelTable& k = kernels::active());

/// Long-time RK4 limit from the maximally mixed state.
SteadyStateResult steady_state_by_evolution(const Operator& h,
                                            std::span<const JumpOperator> jumps,
                                            std::optional<EvolutionSettings> settings = {});

}  // namespace spinchain
