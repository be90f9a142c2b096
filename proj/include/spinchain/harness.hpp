#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinchain/chain_model.hpp"
#include "spinchain/drives.hpp"
#include "spinchain/liouvillian.hpp"
#include "spinchain/observables.hpp"
#include "spinchain/symmetry.hpp"

namespace spinchain {

/// Throws InvalidInput unless the drive family is stated for the model kind:
/// TwistedXY/SixOpXXZ with XXZ, TwistedZX/SixOpXXX with XXX, ZTarget with both.
void check_compatible(ModelKind kind, DriveFamily family);
bool is_compatible(ModelKind kind, DriveFamily family);

// ---------------------------------------------------------------------------
// Single solves

struct SolveReport {
  SteadyStateResult solution;
  StateDiagnostics diagnostics;
  CurrentReport currents;
  /// Trace distance to the RK4 steady state when cross-checked.
  std::optional<double> time_evolution_distance;
};

SolveReport run_solve(const ChainModel& model, const DriveSpec& spec,
                      const SolverOptions& options = {}, bool time_evolution_crosscheck = false);

struct OneWayResult {
  DriveFamily family;
  ChainModel model;
  DriveSpec drive;
  double forward_energy_current = 0.0;
  double inverted_energy_current = 0.0;
  double absolute_difference = 0.0;
  double forward_spin_current = 0.0;
  double inverted_spin_current = 0.0;
  SolveReport forward;
  SolveReport inverted;
};

/// Solves (model, spec) and (model, invert_baths(spec)) and compares the
/// field-free energy currents.
OneWayResult run_one_way(const ChainModel& model, const DriveSpec& spec,
                         const SolverOptions& options = {});

// ---------------------------------------------------------------------------
// Three-site benchmark

/// Coefficient of B f in the small-f expansion of <F> at N = 3.
double field_coefficient(double anisotropy);
/// Coefficient of f^2 delta in the same expansion.
double asymmetry_coefficient(double anisotropy);

struct BenchmarkResult {
  double Delta = 0.0;
  double delta = 0.0;
  double f = 0.0;
  double B = 0.0;
  double measured_current = 0.0;
  double predicted_current = 0.0;
  double relative_error = 0.0;
  SolveReport report;
};

/// N = 3, alpha = 1, anisotropies (Delta - delta, Delta + delta), uniform
/// field B, ZTarget with f_L = f, f_R = -f, gamma = 1.
ChainModel three_site_model(double Delta, double delta, double B);
BenchmarkResult run_three_site_benchmark(double Delta, double delta, double f, double B,
                                         const SolverOptions& options = {});

// ---------------------------------------------------------------------------
// Parity scan

struct ParityRow {
  double f = 0.0;
  double energy_current_plus = 0.0;
  double energy_current_minus = 0.0;
  double spin_current_plus = 0.0;
  double spin_current_minus = 0.0;
  /// |F(f) - F(-f)|
  double energy_evenness_defect = 0.0;
  /// |J(f) + J(-f)|
  double spin_oddness_defect = 0.0;
};

/// ZTarget with f_L = f, f_R = -f on a field-free model.
std::vector<ParityRow> run_parity_scan(const ChainModel& model, double gamma,
                                       const std::vector<double>& f_grid,
                                       const SolverOptions& options = {});

// ---------------------------------------------------------------------------
// Symmetry suite

struct SymmetryPair {
  UnitaryFamily unitary;
  DriveFamily drive;
};

std::vector<SymmetryPair> matched_pairs();

struct SymmetrySuiteOptions {
  std::vector<int> n_sites = {3, 4, 5};
  int theta_samples = 8;
  int amplitude_draws = 10;
  std::uint64_t seed = 42;
  std::vector<SymmetryPair> pairs = matched_pairs();
  /// Also solve the forward steady state and check the mapped residual.
  bool end_to_end = true;
  double operator_tolerance = 1e-12;
  double end_to_end_tolerance = 1e-9;
  double table_tolerance = 1e-14;
  SolverOptions solver;
};

struct SymmetryRow {
  UnitaryFamily unitary;
  DriveFamily drive;
  int n_sites = 0;
  int sample = 0;
  std::optional<double> theta;
  double hamiltonian_deviation = 0.0;
  double dissipator_deviation = 0.0;
  double current_deviation = 0.0;
  double table_deviation = 0.0;
  std::optional<double> end_to_end_residual;
  bool pass = false;
  std::string error;
};

/// Twisted pairs run over theta_k = 2 pi k / theta_samples, six-operator pairs
/// over amplitude_draws seeded draws. Errors are recorded in the row.
std::vector<SymmetryRow> run_symmetry_suite(const SymmetrySuiteOptions& options = {});

// ---------------------------------------------------------------------------
// Seeded draws

using Rng = std::mt19937_64;

/// Generator for sample `index` of stream `stream`, independent of the order
/// samples are evaluated in.
Rng sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Graded field-free model: XXZ with alpha = 1 and delta ramp around U[0.5,1.5]
/// with spread U[0.1,0.5]; XXX with the same ramp on alpha.
ChainModel draw_graded_model(ModelKind kind, int n_sites, Rng& rng);

/// ZTarget: f_L = -f_R ~ U[0.1,0.9]. Twisted: f ~ U[-0.9,0.9], theta ~ U[0,2pi).
/// Six-operator: amplitudes ~ U[0.1,1.5].
DriveSpec draw_drive(DriveFamily family, Rng& rng, std::optional<double> theta = {});

// ---------------------------------------------------------------------------

/// Worker cap from SPINCHAIN_MAX_WORKERS, else hardware concurrency (>= 1).
int max_workers();

}  // namespace spinchain
