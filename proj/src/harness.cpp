#include "spinchain/harness.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "spinchain/error.hpp"
#include "spinchain/parallel.hpp"

namespace spinchain {

namespace {

bool is_twisted(DriveFamily f) {
  return f == DriveFamily::TwistedXY || f == DriveFamily::TwistedZX;
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

bool is_compatible(ModelKind kind, DriveFamily family) {
  switch (family) {
    case DriveFamily::ZTarget: return true;
    case DriveFamily::TwistedXY:
    case DriveFamily::SixOpXXZ: return kind == ModelKind::XXZ;
    case DriveFamily::TwistedZX:
    case DriveFamily::SixOpXXX: return kind == ModelKind::XXX;
  }
  return false;
}

void check_compatible(ModelKind kind, DriveFamily family) {
  if (!is_compatible(kind, family)) {
    throw InvalidInput(std::string("drive family ") + std::string(to_string(family)) +
                       " is not defined for the " +
                       (kind == ModelKind::XXZ ? "xxz" : "xxx") + " model");
  }
}

SolveReport run_solve(const ChainModel& model, const DriveSpec& spec,
                      const SolverOptions& options, bool time_evolution_crosscheck) {
  model.validate();
  check_compatible(model.kind, spec.family);
  const Operator h = build_hamiltonian(model);
  const auto jumps = build_jump_operators(spec, model.n_sites);
  SolveReport report{steady_state(h, jumps, options), {}, {}, std::nullopt};
  report.diagnostics = report.solution.state.diagnostics();
  report.currents = measure(report.solution.state, model);
  if (time_evolution_crosscheck) {
    const auto evolved = steady_state_by_evolution(h, jumps);
    report.time_evolution_distance =
        trace_distance(report.solution.state.matrix(), evolved.state.matrix());
  }
  return report;
}

OneWayResult run_one_way(const ChainModel& model, const DriveSpec& spec,
                         const SolverOptions& options) {
  model.validate();
  if (model.n_sites < 3) throw InvalidInput("one-way comparison needs n_sites >= 3");
  check_compatible(model.kind, spec.family);
  const ChainModel bare = without_field(model);
  const Operator h = build_hamiltonian(model);

  auto solve = [&](const DriveSpec& s) {
    const auto jumps = build_jump_operators(s, model.n_sites);
    SolveReport r{steady_state(h, jumps, options), {}, {}, std::nullopt};
    r.diagnostics = r.solution.state.diagnostics();
    r.currents = measure(r.solution.state, bare, FieldTerm::Exclude);
    return r;
  };

  OneWayResult out{spec.family, model, spec, 0, 0, 0, 0, 0, solve(spec),
                   solve(invert_baths(spec))};
  out.forward_energy_current = out.forward.currents.mean_energy_current;
  out.inverted_energy_current = out.inverted.currents.mean_energy_current;
  out.absolute_difference = std::abs(out.forward_energy_current - out.inverted_energy_current);
  out.forward_spin_current = out.forward.currents.mean_spin_current;
  out.inverted_spin_current = out.inverted.currents.mean_spin_current;
  return out;
}

double field_coefficient(double anisotropy) {
  const double d2 = anisotropy * anisotropy;
  return 912.0 / (969.0 + 48.0 * d2);
}

double asymmetry_coefficient(double anisotropy) {
  const double d2 = anisotropy * anisotropy;
  const double a = 323.0 + 16.0 * d2;
  return 32.0 * (20224.0 * d2 * d2 + 64256.0 * d2 - 1083.0) / ((51.0 + 16.0 * d2) * a * a);
}

ChainModel three_site_model(double Delta, double delta, double B) {
  std::vector<double> field;
  if (B != 0.0) field.assign(3, B);
  return make_xxz(1.0, {Delta - delta, Delta + delta}, std::move(field));
}

BenchmarkResult run_three_site_benchmark(double Delta, double delta, double f, double B,
                                         const SolverOptions& options) {
  const ChainModel model = three_site_model(Delta, delta, B);
  BenchmarkResult out{Delta, delta, f, B, 0, 0, 0,
                      run_solve(model, z_target_drive(1.0, f, -f), options)};
  out.measured_current = out.report.currents.mean_energy_current;
  out.predicted_current =
      B * f * field_coefficient(Delta) + f * f * delta * asymmetry_coefficient(Delta);
  out.relative_error = std::abs(out.measured_current - out.predicted_current) /
                       std::max(std::abs(out.predicted_current), 1e-300);
  return out;
}

std::vector<ParityRow> run_parity_scan(const ChainModel& model, double gamma,
                                       const std::vector<double>& f_grid,
                                       const SolverOptions& options) {
  model.validate();
  if (model.has_field()) throw InvalidInput("parity scan requires B = 0");
  if (model.n_sites < 3) throw InvalidInput("parity scan needs n_sites >= 3");
  const Operator h = build_hamiltonian(model);

  auto currents = [&](double f) {
    const auto jumps = build_jump_operators(z_target_drive(gamma, f, -f), model.n_sites);
    return measure(steady_state(h, jumps, options).state, model, FieldTerm::Exclude);
  };

  return parallel_map(f_grid.size(), [&](std::size_t i) {
    const double f = f_grid[i];
    const auto plus = currents(f);
    const auto minus = currents(-f);
    ParityRow row;
    row.f = f;
    row.energy_current_plus = plus.mean_energy_current;
    row.energy_current_minus = minus.mean_energy_current;
    row.spin_current_plus = plus.mean_spin_current;
    row.spin_current_minus = minus.mean_spin_current;
    row.energy_evenness_defect = std::abs(row.energy_current_plus - row.energy_current_minus);
    row.spin_oddness_defect = std::abs(row.spin_current_plus + row.spin_current_minus);
    return row;
  });
}

std::vector<SymmetryPair> matched_pairs() {
  return {{UnitaryFamily::U1, DriveFamily::TwistedXY},
          {UnitaryFamily::U2, DriveFamily::SixOpXXZ},
          {UnitaryFamily::U3, DriveFamily::TwistedZX},
          {UnitaryFamily::U4, DriveFamily::SixOpXXX}};
}

std::vector<SymmetryRow> run_symmetry_suite(const SymmetrySuiteOptions& options) {
  if (options.theta_samples < 1 || options.amplitude_draws < 1) {
    throw InvalidInput("symmetry suite needs at least one theta sample and one draw");
  }
  struct Task {
    std::size_t pair;
    int n_sites;
    int sample;
  };
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < options.pairs.size(); ++p) {
    const auto& pair = options.pairs[p];
    const bool angular = is_twisted(pair.drive) || pair.unitary == UnitaryFamily::U1 ||
                         pair.unitary == UnitaryFamily::U3;
    const int samples = angular ? options.theta_samples : options.amplitude_draws;
    for (int n : options.n_sites) {
      for (int s = 0; s < samples; ++s) tasks.push_back({p, n, s});
    }
  }

  return parallel_map(tasks.size(), [&](std::size_t t) {
    const Task& task = tasks[t];
    const SymmetryPair& pair = options.pairs[task.pair];
    SymmetryRow row{pair.unitary, pair.drive, task.n_sites, task.sample, {}, 0, 0, 0, 0, {},
                    false, {}};
    try {
      const bool angular = is_twisted(pair.drive) || pair.unitary == UnitaryFamily::U1 ||
                           pair.unitary == UnitaryFamily::U3;
      if (angular) {
        row.theta = 2.0 * std::numbers::pi * task.sample / options.theta_samples;
      }
      Rng rng = sample_rng(options.seed, 100 * task.pair + task.n_sites, task.sample);
      ModelKind kind = matched_model(pair.unitary);
      if (!is_compatible(kind, pair.drive)) {
        kind = kind == ModelKind::XXZ ? ModelKind::XXX : ModelKind::XXZ;
      }
      const ChainModel model = draw_graded_model(kind, task.n_sites, rng);
      const DriveSpec spec =
          draw_drive(pair.drive, rng, is_twisted(pair.drive) ? row.theta : std::nullopt);
      const bool twisted_u =
          pair.unitary == UnitaryFamily::U1 || pair.unitary == UnitaryFamily::U3;
      const LocalUnitary u = make_unitary(pair.unitary, twisted_u ? row.theta : std::nullopt);

      row.table_deviation = conjugation_table_deviation(u);
      row.dissipator_deviation = verify_dissipator_swap(u, spec, task.n_sites);
      const Operator big_u = global_unitary(u, task.n_sites);
      const Operator h = build_hamiltonian(model);
      row.hamiltonian_deviation = verify_hamiltonian_invariance(big_u, h);
      row.current_deviation = verify_current_invariance(big_u, model);
      row.pass = row.table_deviation <= options.table_tolerance &&
                 row.dissipator_deviation <= options.operator_tolerance &&
                 row.hamiltonian_deviation <= options.operator_tolerance &&
                 row.current_deviation <= options.operator_tolerance;
      if (options.end_to_end) {
        const auto jumps = build_jump_operators(spec, task.n_sites);
        const auto rho = steady_state(h, jumps, options.solver).state;
        row.end_to_end_residual = mapped_state_residual(u, model, spec, rho);
        row.pass = row.pass && *row.end_to_end_residual <= options.end_to_end_tolerance;
      }
    } catch (const Error& e) {
      row.pass = false;
      row.error = e.what();
    }
    return row;
  });
}

Rng sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

ChainModel draw_graded_model(ModelKind kind, int n_sites, Rng& rng) {
  if (n_sites < 2) throw InvalidInput("chain needs n_sites >= 2");
  const double base = uniform(rng, 0.5, 1.5);
  const double spread = uniform(rng, 0.1, 0.5);
  auto profile = graded_profile(base, spread, n_sites - 1);
  return kind == ModelKind::XXZ ? make_xxz(1.0, std::move(profile))
                                : make_xxx(std::move(profile));
}

DriveSpec draw_drive(DriveFamily family, Rng& rng, std::optional<double> theta) {
  switch (family) {
    case DriveFamily::ZTarget: {
      const double f = uniform(rng, 0.1, 0.9);
      return z_target_drive(1.0, f, -f);
    }
    case DriveFamily::TwistedXY:
    case DriveFamily::TwistedZX: {
      const double f = uniform(rng, -0.9, 0.9);
      const double th = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      const double angle = theta.value_or(th);
      return family == DriveFamily::TwistedXY ? twisted_xy_drive(1.0, f, angle)
                                              : twisted_zx_drive(1.0, f, angle);
    }
    case DriveFamily::SixOpXXZ:
    case DriveFamily::SixOpXXX: {
      SixOpAmplitudes a;
      for (double* x : {&a.alpha, &a.beta, &a.p, &a.q, &a.u, &a.v}) *x = uniform(rng, 0.1, 1.5);
      return family == DriveFamily::SixOpXXZ ? six_op_xxz_drive(a) : six_op_xxx_drive(a);
    }
  }
  throw InvalidInput("unknown drive family");
}

int max_workers() {
  if (const char* env = std::getenv("SPINCHAIN_MAX_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace spinchain
