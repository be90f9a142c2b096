// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "spinchain/error.hpp"
#include "spinchain/harness.hpp"
#include "spinchain/parallel.hpp"

using namespace spinchain;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Every solved instance is recorded here and checked by criterion 7.
struct Instance {
  std::string label;
  StateDiagnostics diagnostics;
  CurrentReport currents;
};

std::mutex g_mutex;
std::vector<Instance> g_instances;

void record(const std::string& label, const SolveReport& r) {
  std::lock_guard lock(g_mutex);
  g_instances.push_back({label, r.diagnostics, r.currents});
}

Outcome field_coefficient_check() {
  const auto t0 = Clock::now();
  const auto r = run_three_site_benchmark(1.0, 0.0, 0.01, 1.0);
  const double elapsed = seconds_since(t0);
  record("benchmark field", r.report);
  const double ratio = r.measured_current / (r.B * r.f);
  const double expected = field_coefficient(1.0);
  const double err = std::abs(ratio - expected) / expected;
  return {err <= 1e-3 && elapsed < 1.0,
          "<F>/(Bf) = " + fmt("%.10f", ratio) + ", expected " + fmt("%.10f", expected) +
              ", rel err " + fmt("%.3e", err) + ", " + fmt("%.3f", elapsed) + " s"};
}

Outcome asymmetry_coefficient_check() {
  const auto t0 = Clock::now();
  const auto coarse = run_three_site_benchmark(1.0, 0.05, 0.1, 0.0);
  const auto fine = run_three_site_benchmark(1.0, 0.025, 0.05, 0.0);
  const double elapsed = seconds_since(t0);
  record("benchmark asymmetry coarse", coarse.report);
  record("benchmark asymmetry fine", fine.report);
  return {coarse.relative_error <= 5e-2 && fine.relative_error < coarse.relative_error &&
              elapsed < 1.0,
          "rel err " + fmt("%.4e", coarse.relative_error) + " at (f, delta) = (0.1, 0.05), " +
              fmt("%.4e", fine.relative_error) + " at (0.05, 0.025), " +
              fmt("%.3f", elapsed) + " s"};
}

Outcome one_way_check() {
  struct Combo {
    ModelKind kind;
    DriveFamily family;
  };
  const Combo combos[] = {{ModelKind::XXZ, DriveFamily::ZTarget},
                          {ModelKind::XXZ, DriveFamily::TwistedXY},
                          {ModelKind::XXZ, DriveFamily::SixOpXXZ},
                          {ModelKind::XXX, DriveFamily::ZTarget},
                          {ModelKind::XXX, DriveFamily::TwistedZX},
                          {ModelKind::XXX, DriveFamily::SixOpXXX}};
  struct Task {
    int combo;
    int n;
    int draw;
  };
  std::vector<Task> tasks;
  for (int c = 0; c < 6; ++c) {
    for (int n = 3; n <= 6; ++n) {
      for (int d = 0; d < 10; ++d) tasks.push_back({c, n, d});
    }
  }
  const auto t0 = Clock::now();
  struct Row {
    double ratio;
    std::string error;
  };
  const auto rows = parallel_map(tasks.size(), [&](std::size_t i) -> Row {
    const Task& t = tasks[i];
    const Combo& c = combos[t.combo];
    Rng rng = sample_rng(42, 16 * t.combo + t.n, t.draw);
    const ChainModel model = draw_graded_model(c.kind, t.n, rng);
    const DriveSpec drive = draw_drive(c.family, rng);
    try {
      const auto r = run_one_way(model, drive);
      const std::string label = std::string(to_string(c.family)) + " N=" + std::to_string(t.n) +
                                " draw " + std::to_string(t.draw);
      record(label + " forward", r.forward);
      record(label + " inverted", r.inverted);
      return {r.absolute_difference / std::max(1.0, std::abs(r.forward_energy_current)), {}};
    } catch (const Error& e) {
      return {INFINITY, e.what()};
    }
  });
  const double elapsed = seconds_since(t0);
  double worst = 0.0;
  int failures = 0;
  std::string first_error;
  for (const auto& r : rows) {
    worst = std::max(worst, r.ratio);
    if (!(r.ratio <= 1e-9)) ++failures;
    if (!r.error.empty() && first_error.empty()) first_error = r.error;
  }
  std::string detail = std::to_string(rows.size()) + " instances, max |F_fwd - F_inv| / max(1, |F_fwd|) = " +
                       fmt("%.3e", worst) + ", " + fmt("%.1f", elapsed) + " s";
  if (!first_error.empty()) detail += ", first error: " + first_error;
  return {failures == 0 && elapsed < 1800.0, detail};
}

Outcome parity_check() {
  const auto rows = run_parity_scan(make_xxz(1.0, {0.95, 1.05}), 1.0, {0.05, 0.1, 0.2});
  double even = 0.0;
  double odd = 0.0;
  for (const auto& r : rows) {
    even = std::max(even, r.energy_evenness_defect);
    odd = std::max(odd, r.spin_oddness_defect);
  }
  return {even <= 1e-10 && odd <= 1e-10,
          "max |F(f) - F(-f)| = " + fmt("%.3e", even) + ", max |J(f) + J(-f)| = " +
              fmt("%.3e", odd)};
}

Outcome symmetry_check() {
  SymmetrySuiteOptions opts;
  opts.end_to_end = false;
  const auto rows = run_symmetry_suite(opts);
  double h = 0, d = 0, c = 0, t = 0;
  int failures = 0;
  for (const auto& r : rows) {
    h = std::max(h, r.hamiltonian_deviation);
    d = std::max(d, r.dissipator_deviation);
    c = std::max(c, r.current_deviation);
    t = std::max(t, r.table_deviation);
    if (!r.pass) ++failures;
  }
  // Conjugation tables on a finer angle grid, including the twist-free unitaries.
  for (int k = 0; k < 64; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / 64;
    t = std::max(t, conjugation_table_deviation(make_unitary(UnitaryFamily::U1, theta)));
    t = std::max(t, conjugation_table_deviation(make_unitary(UnitaryFamily::U3, theta)));
  }
  t = std::max(t, conjugation_table_deviation(make_unitary(UnitaryFamily::U2)));
  t = std::max(t, conjugation_table_deviation(make_unitary(UnitaryFamily::U4)));
  return {failures == 0 && h <= 1e-12 && d <= 1e-12 && c <= 1e-12 && t <= 1e-14,
          std::to_string(rows.size()) + " rows, max deviations: H " + fmt("%.2e", h) +
              ", dissipator " + fmt("%.2e", d) + ", current " + fmt("%.2e", c) + ", tables " +
              fmt("%.2e", t)};
}

Outcome crosscheck_check() {
  const DriveFamily families[] = {DriveFamily::ZTarget, DriveFamily::TwistedXY,
                                  DriveFamily::SixOpXXZ, DriveFamily::TwistedZX,
                                  DriveFamily::SixOpXXX};
  const auto t0 = Clock::now();
  struct Row {
    double distance;
    int nullity;
    std::string error;
  };
  const auto rows = parallel_map(20, [&](std::size_t i) -> Row {
    const DriveFamily family = families[i % 5];
    const int draw = static_cast<int>(i / 5);
    ModelKind kind = is_compatible(ModelKind::XXZ, family) ? ModelKind::XXZ : ModelKind::XXX;
    if (family == DriveFamily::ZTarget && draw % 2 == 1) kind = ModelKind::XXX;
    Rng rng = sample_rng(42, 1000 + i, 0);
    const ChainModel model = draw_graded_model(kind, 3, rng);
    const DriveSpec drive = draw_drive(family, rng);
    try {
      const auto r = run_solve(model, drive, {}, true);
      record(std::string(to_string(family)) + " crosscheck " + std::to_string(i), r);
      return {*r.time_evolution_distance, r.solution.nullspace_dimension.value_or(-1), {}};
    } catch (const Error& e) {
      return {INFINITY, -1, e.what()};
    }
  });
  double worst = 0.0;
  bool unique = true;
  std::string first_error;
  for (const auto& r : rows) {
    worst = std::max(worst, r.distance);
    unique = unique && r.nullity == 1;
    if (!r.error.empty() && first_error.empty()) first_error = r.error;
  }
  std::string detail = "20 instances, max trace distance " + fmt("%.3e", worst) +
                       (unique ? ", all nullspace_dimension = 1" : ", nullspace_dimension != 1 seen") +
                       ", " + fmt("%.1f", seconds_since(t0)) + " s";
  if (!first_error.empty()) detail += ", first error: " + first_error;
  return {worst <= 1e-6 && unique, detail};
}

Outcome structural_check() {
  if (g_instances.empty()) return {false, "no solved instances recorded (run with criteria 1-6)"};
  const StateTolerances tol;
  int state_failures = 0;
  int current_failures = 0;
  double worst_current = 0.0;
  std::string first;
  for (const auto& inst : g_instances) {
    const auto& d = inst.diagnostics;
    if (!(d.hermiticity_error <= tol.hermiticity && d.trace_error <= tol.trace &&
          d.min_eigenvalue >= -tol.positivity)) {
      ++state_failures;
      if (first.empty()) first = inst.label;
    }
    const auto& c = inst.currents;
    const double js = c.max_site_deviation_spin / std::max(1.0, std::abs(c.mean_spin_current));
    const double je =
        c.max_site_deviation_energy / std::max(1.0, std::abs(c.mean_energy_current));
    worst_current = std::max({worst_current, js, je});
    if (!(js <= 1e-9 && je <= 1e-9)) {
      ++current_failures;
      if (first.empty()) first = inst.label;
    }
  }
  std::string detail = std::to_string(g_instances.size()) + " states, " +
                       std::to_string(state_failures) + " state-check failures, max relative current spread " +
                       fmt("%.3e", worst_current);
  if (!first.empty()) detail += ", first failure: " + first;
  return {state_failures == 0 && current_failures == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"three-site field coefficient", field_coefficient_check},
      {"three-site asymmetry coefficient", asymmetry_coefficient_check},
      {"one-way street, all families, N = 3..6", one_way_check},
      {"parity of energy and spin currents", parity_check},
      {"symmetry operator suite", symmetry_check},
      {"nullspace vs RK4 steady states", crosscheck_check},
      {"structural invariants of solved states", structural_check},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
