#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "spinchain/error.hpp"
#include "spinchain/liouvillian.hpp"

namespace spinchain {

EvolutionSettings default_evolution_settings(const Operator& h,
                                             std::span<const JumpOperator> jumps) {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(h), Eigen::EigenvaluesOnly);
  const double h_norm = es.eigenvalues().cwiseAbs().maxCoeff();
  std::map<int, double> site_rate;
  double rate_min = std::numeric_limits<double>::infinity();
  for (const auto& j : jumps) {
    const double r = channel_rate(j);
    site_rate[j.site] += r;
    if (r > 1e-14) rate_min = std::min(rate_min, r);
  }
  if (!std::isfinite(rate_min)) {
    throw InvalidInput("default evolution settings need at least one nonzero channel");
  }
  double rate_max = 0.0;
  for (const auto& [site, r] : site_rate) rate_max = std::max(rate_max, r);
  double dt = 0.01 / std::max(h_norm, 1e-300);
  dt = std::min(dt, 0.5 / rate_max);
  return {200.0 / rate_min, dt};
}

DensityMatrix time_evolve(const Operator& h, std::span<const JumpOperator> jumps,
                          const DensityMatrix& rho0, double t_final, double dt,
                          const kernels::KernelTable& k) {
  if (!(dt > 0.0) || !(t_final >= dt)) {
    throw InvalidInput("time_evolve needs dt > 0 and t_final >= dt");
  }
  const LindbladRhs rhs(h, jumps, k);
  if (rho0.dim() != rhs.dim()) throw InvalidInput("initial state dimension mismatch");

  Operator rho = rho0.matrix();
  Operator k1, k2, k3, k4;
  Operator stage(rho.rows(), rho.cols());
  const auto n = static_cast<std::size_t>(rho.size());
  const auto steps = static_cast<long long>(std::llround(t_final / dt));

  for (long long step = 0; step < steps; ++step) {
    rhs.apply(rho, k1);
    stage = rho;
    k.axpy(cplx(0.5 * dt), k1.data(), stage.data(), n);
    rhs.apply(stage, k2);
    stage = rho;
    k.axpy(cplx(0.5 * dt), k2.data(), stage.data(), n);
    rhs.apply(stage, k3);
    stage = rho;
    k.axpy(cplx(dt), k3.data(), stage.data(), n);
    rhs.apply(stage, k4);

    k.axpy(cplx(dt / 6.0), k1.data(), rho.data(), n);
    k.axpy(cplx(dt / 3.0), k2.data(), rho.data(), n);
    k.axpy(cplx(dt / 3.0), k3.data(), rho.data(), n);
    k.axpy(cplx(dt / 6.0), k4.data(), rho.data(), n);

    rho = hermitian_part(rho);
    const cplx tr = rho.trace();
    const double norm = rho.norm();
    if (!std::isfinite(norm) || norm > 1.0 + 1e-6) {
      throw StepSizeError("RK4 state left the physical region at t = " +
                          std::to_string((step + 1) * dt) + "; reduce dt");
    }
    if (std::abs(tr - 1.0) > 1e-8) {
      throw StepSizeError("trace drifted by " + std::to_string(std::abs(tr - 1.0)) +
                          " in one step; reduce dt");
    }
    rho /= tr.real();
  }
  return DensityMatrix(std::move(rho));
}

SteadyStateResult steady_state_by_evolution(const Operator& h,
                                            std::span<const JumpOperator> jumps,
                                            std::optional<EvolutionSettings> settings) {
  const auto s = settings ? *settings : default_evolution_settings(h, jumps);
  const int n = sites_from_dim(static_cast<std::size_t>(h.rows()));
  DensityMatrix rho = time_evolve(h, jumps, DensityMatrix::maximally_mixed(n), s.t_final, s.dt);
  SteadyStateResult result{std::move(rho), 0.0, std::nullopt, SolveMethod::TimeEvolution};
  result.residual = apply_generator(h, jumps, result.state.matrix()).norm();
  return result;
}

}  // namespace spinchain
