#include "spinchain/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "spinchain/error.hpp"

#ifndef SPINCHAIN_VERSION
#define SPINCHAIN_VERSION "0.0.0"
#endif

namespace spinchain {

using nlohmann::ordered_json;

namespace {

SolverOptions solver_options(const SolverConfig& s) {
  SolverOptions o;
  o.rank_tolerance = s.rank_tolerance;
  o.residual_tolerance = s.residual_tolerance;
  return o;
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write(const ordered_json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad =
      indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += ordered_json(key).dump();
        out += indent > 0 ? ": " : ":";
        write(value, indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        write(j[i], indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  if (v.is_structured()) throw InvalidInput("CSV output needs flat result records");
  return v.dump();
}

template <class T>
ordered_json optional_value(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

bool tabular(Experiment e) {
  return e == Experiment::ParityScan || e == Experiment::SymmetrySuite;
}

}  // namespace

std::string_view version() { return SPINCHAIN_VERSION; }

ordered_json to_json(const SolveReport& r, const ChainModel& model, const DriveSpec& drive) {
  ordered_json j;
  j["family"] = std::string(to_string(drive.family));
  j["model"] = model_to_json(model);
  j["nullspace_dimension"] = optional_value(r.solution.nullspace_dimension);
  j["residual"] = r.solution.residual;
  j["hermiticity_error"] = r.diagnostics.hermiticity_error;
  j["trace_error"] = r.diagnostics.trace_error;
  j["min_eigenvalue"] = r.diagnostics.min_eigenvalue;
  j["spin_currents"] = r.currents.spin_currents;
  j["energy_currents"] = r.currents.energy_currents;
  j["mean_spin_current"] = r.currents.mean_spin_current;
  j["mean_energy_current"] = r.currents.mean_energy_current;
  j["max_site_deviation_spin"] = r.currents.max_site_deviation_spin;
  j["max_site_deviation_energy"] = r.currents.max_site_deviation_energy;
  j["time_evolution_distance"] = optional_value(r.time_evolution_distance);
  return j;
}

ordered_json to_json(const OneWayResult& r) {
  ordered_json j;
  j["family"] = std::string(to_string(r.family));
  j["model"] = model_to_json(r.model);
  j["forward_energy_current"] = r.forward_energy_current;
  j["inverted_energy_current"] = r.inverted_energy_current;
  j["absolute_difference"] = r.absolute_difference;
  j["forward_spin_current"] = r.forward_spin_current;
  j["inverted_spin_current"] = r.inverted_spin_current;
  return j;
}

ordered_json to_json(const BenchmarkResult& r) {
  ordered_json j;
  j["Delta"] = r.Delta;
  j["delta"] = r.delta;
  j["f"] = r.f;
  j["B"] = r.B;
  j["measured_current"] = r.measured_current;
  j["predicted_current"] = r.predicted_current;
  j["relative_error"] = r.relative_error;
  return j;
}

ordered_json to_json(const ParityRow& r) {
  ordered_json j;
  j["f"] = r.f;
  j["energy_current_plus"] = r.energy_current_plus;
  j["energy_current_minus"] = r.energy_current_minus;
  j["spin_current_plus"] = r.spin_current_plus;
  j["spin_current_minus"] = r.spin_current_minus;
  j["energy_evenness_defect"] = r.energy_evenness_defect;
  j["spin_oddness_defect"] = r.spin_oddness_defect;
  return j;
}

ordered_json to_json(const SymmetryRow& r) {
  ordered_json j;
  j["unitary"] = std::string(to_string(r.unitary));
  j["drive"] = std::string(to_string(r.drive));
  j["n_sites"] = r.n_sites;
  j["sample"] = r.sample;
  j["theta"] = optional_value(r.theta);
  j["hamiltonian_deviation"] = r.hamiltonian_deviation;
  j["dissipator_deviation"] = r.dissipator_deviation;
  j["current_deviation"] = r.current_deviation;
  j["table_deviation"] = r.table_deviation;
  j["end_to_end_residual"] = optional_value(r.end_to_end_residual);
  j["pass"] = r.pass;
  j["error"] = r.error;
  return j;
}

ordered_json run_experiment(const RunConfig& config) {
  const SolverOptions opts = solver_options(config.solver);
  ordered_json results = ordered_json::array();
  switch (config.experiment) {
    case Experiment::Solve: {
      const auto r = run_solve(config.model.value(), config.drive.value(), opts,
                               config.solver.time_evolution_crosscheck);
      results.push_back(to_json(r, *config.model, *config.drive));
      break;
    }
    case Experiment::OneWay:
      results.push_back(to_json(run_one_way(config.model.value(), config.drive.value(), opts)));
      break;
    case Experiment::Benchmark3: {
      const auto& b = config.benchmark;
      results.push_back(to_json(run_three_site_benchmark(b.Delta, b.delta, b.f, b.B, opts)));
      break;
    }
    case Experiment::ParityScan:
      for (const auto& row :
           run_parity_scan(config.model.value_or(default_parity_model()), config.parity.gamma,
                           config.parity.f_grid, opts)) {
        results.push_back(to_json(row));
      }
      break;
    case Experiment::SymmetrySuite: {
      SymmetrySuiteOptions s;
      s.n_sites = config.suite.sizes;
      s.theta_samples = config.suite.theta_samples;
      s.amplitude_draws = config.suite.amplitude_draws;
      s.end_to_end = config.suite.end_to_end;
      s.seed = config.seed;
      s.solver = opts;
      for (const auto& row : run_symmetry_suite(s)) results.push_back(to_json(row));
      break;
    }
  }
  ordered_json doc;
  doc["meta"] = {{"version", std::string(version())},
                 {"resolved_config", resolved_config(config)}};
  doc["results"] = std::move(results);
  return doc;
}

std::string dump_json(const ordered_json& doc, int indent) {
  std::string out;
  write(doc, indent, 0, out);
  out += "\n";
  return out;
}

std::string dump_csv(const ordered_json& doc) {
  const ordered_json& rows = doc.at("results");
  std::string out;
  if (rows.empty()) return out;
  bool first = true;
  for (const auto& [key, value] : rows[0].items()) {
    if (!first) out += ",";
    first = false;
    out += key;
  }
  out += "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      if (!first) out += ",";
      first = false;
      out += csv_cell(value);
    }
    out += "\n";
  }
  return out;
}

std::string run(const RunConfig& config) {
  if (config.output.format == OutputFormat::Csv && !tabular(config.experiment)) {
    throw InvalidInput("csv output is available for parity_scan and symmetry_suite only");
  }
  const ordered_json doc = run_experiment(config);
  std::string text =
      config.output.format == OutputFormat::Json ? dump_json(doc) : dump_csv(doc);
  if (config.output.path.empty()) return text;
  std::ofstream file(config.output.path, std::ios::binary);
  if (!file) throw IoError("cannot open " + config.output.path + " for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing " + config.output.path);
  return {};
}

}  // namespace spinchain
