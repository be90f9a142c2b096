#include "spinchain/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "spinchain/error.hpp"
#include "spinchain/harness.hpp"
#include "spinchain/liouvillian.hpp"

namespace spinchain {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

std::string dotted(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void collect_unknown(const json& obj, const std::string& prefix,
                     const std::set<std::string>& allowed, std::vector<std::string>& unknown) {
  if (!obj.is_object()) return;
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) unknown.push_back(dotted(prefix, key));
  }
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw InvalidInput(path + " must be an object");
  return j;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw InvalidInput(path + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InvalidInput(path + " must be finite");
  return x;
}

long long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InvalidInput(path + " must be an integer");
  return j.get<long long>();
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw InvalidInput(path + " must be true or false");
  return j.get<bool>();
}

std::string text_value(const json& j, const std::string& path) {
  if (!j.is_string()) throw InvalidInput(path + " must be a string");
  return j.get<std::string>();
}

/// Number or array of numbers; a number is repeated `count` times.
std::vector<double> profile(const json& j, const std::string& path, std::size_t count) {
  if (j.is_number()) return std::vector<double>(count, number(j, path));
  if (!j.is_array()) throw InvalidInput(path + " must be a number or an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  if (out.size() != count) {
    throw InvalidInput(path + " has " + std::to_string(out.size()) + " entries, expected " +
                       std::to_string(count));
  }
  return out;
}

double in_unit_interval(const json& j, const std::string& path, const char* name) {
  const double x = number(j, path);
  if (x < -1.0 || x > 1.0) {
    throw InvalidInput(path + " = " + fmt(x) + " out of range: " + name + " ∈ [-1, 1]");
  }
  return x;
}

double positive(const json& j, const std::string& path, const char* name) {
  const double x = number(j, path);
  if (!(x > 0.0)) throw InvalidInput(path + " = " + fmt(x) + " out of range: " + name + " > 0");
  return x;
}

int int_in(const json& j, const std::string& path, const char* name, long long lo,
           long long hi) {
  const long long v = integer(j, path);
  if (v < lo || v > hi) {
    throw InvalidInput(path + " = " + std::to_string(v) + " out of range: " + name + " ∈ [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

const std::set<std::string> kModelKeys = {"kind", "n_sites", "alpha", "delta", "field"};
const std::set<std::string> kSolverKeys = {"rank_tolerance", "residual_tolerance",
                                           "time_evolution_crosscheck"};
const std::set<std::string> kOutputKeys = {"path", "format"};

std::set<std::string> drive_keys(DriveFamily family) {
  switch (family) {
    case DriveFamily::ZTarget: return {"family", "gamma", "f", "f_left", "f_right"};
    case DriveFamily::TwistedXY:
    case DriveFamily::TwistedZX: return {"family", "gamma", "f", "theta", "inverted"};
    case DriveFamily::SixOpXXZ:
    case DriveFamily::SixOpXXX: return {"family", "alpha", "beta", "p", "q", "u", "v"};
  }
  return {};
}

std::set<std::string> top_level_keys(Experiment e) {
  std::set<std::string> keys = {"experiment", "solver", "output", "seed"};
  switch (e) {
    case Experiment::Solve:
    case Experiment::OneWay: keys.insert({"model", "drive"}); break;
    case Experiment::Benchmark3: keys.insert({"Delta", "Δ", "delta", "δ", "f", "B"}); break;
    case Experiment::ParityScan: keys.insert({"model", "gamma", "f_grid"}); break;
    case Experiment::SymmetrySuite:
      keys.insert({"sizes", "theta_samples", "amplitude_draws", "end_to_end"});
      break;
  }
  return keys;
}

ChainModel parse_model(const json& j, int min_sites) {
  require_object(j, "model");
  ModelKind kind = ModelKind::XXZ;
  if (j.contains("kind")) {
    const auto k = text_value(j["kind"], "model.kind");
    if (k == "xxz") {
      kind = ModelKind::XXZ;
    } else if (k == "xxx") {
      kind = ModelKind::XXX;
    } else {
      throw InvalidInput("model.kind = '" + k + "' must be 'xxz' or 'xxx'");
    }
  }
  if (!j.contains("n_sites")) throw InvalidInput("model.n_sites is required");
  const int n = int_in(j["n_sites"], "model.n_sites", "n_sites", min_sites,
                       kMaxSuperoperatorSites);
  const auto bonds = static_cast<std::size_t>(n - 1);

  std::vector<double> field;
  if (j.contains("field")) {
    field = profile(j["field"], "model.field", static_cast<std::size_t>(n));
    if (std::all_of(field.begin(), field.end(), [](double b) { return b == 0.0; })) {
      field.clear();
    }
  }

  ChainModel model;
  if (kind == ModelKind::XXZ) {
    const double alpha = j.contains("alpha") ? profile(j["alpha"], "model.alpha", 1)[0] : 1.0;
    auto delta = j.contains("delta") ? profile(j["delta"], "model.delta", bonds)
                                     : std::vector<double>(bonds, 1.0);
    model = make_xxz(alpha, std::move(delta), std::move(field));
  } else {
    if (j.contains("delta")) throw InvalidInput("model.delta is not used by the xxx model");
    auto alpha = j.contains("alpha") ? profile(j["alpha"], "model.alpha", bonds)
                                     : std::vector<double>(bonds, 1.0);
    model = make_xxx(std::move(alpha), std::move(field));
  }
  model.validate();
  return model;
}

DriveSpec parse_drive(const json& j) {
  require_object(j, "drive");
  if (!j.contains("family")) throw InvalidInput("drive.family is required");
  const DriveFamily family = drive_family_from_string(text_value(j["family"], "drive.family"));
  auto get = [&](const char* key, double fallback) {
    return j.contains(key) ? number(j[key], std::string("drive.") + key) : fallback;
  };
  const double gamma = j.contains("gamma") ? positive(j["gamma"], "drive.gamma", "gamma") : 1.0;

  switch (family) {
    case DriveFamily::ZTarget: {
      if (j.contains("f") && (j.contains("f_left") || j.contains("f_right"))) {
        throw InvalidInput("drive.f cannot be combined with drive.f_left / drive.f_right");
      }
      double fl = 0.0;
      double fr = 0.0;
      if (j.contains("f")) {
        fl = in_unit_interval(j["f"], "drive.f", "f");
        fr = -fl;
      } else {
        if (j.contains("f_left")) fl = in_unit_interval(j["f_left"], "drive.f_left", "f");
        if (j.contains("f_right")) fr = in_unit_interval(j["f_right"], "drive.f_right", "f");
      }
      return z_target_drive(gamma, fl, fr);
    }
    case DriveFamily::TwistedXY:
    case DriveFamily::TwistedZX: {
      const double f = j.contains("f") ? in_unit_interval(j["f"], "drive.f", "f") : 0.0;
      const double theta = get("theta", 0.0);
      if (theta < 0.0 || theta >= 2.0 * std::numbers::pi) {
        throw InvalidInput("drive.theta = " + fmt(theta) + " out of range: theta ∈ [0, 2π)");
      }
      DriveSpec s = family == DriveFamily::TwistedXY ? twisted_xy_drive(gamma, f, theta)
                                                     : twisted_zx_drive(gamma, f, theta);
      if (j.contains("inverted")) {
        std::get<TwistedParams>(s.params).inverted = boolean(j["inverted"], "drive.inverted");
      }
      return s;
    }
    case DriveFamily::SixOpXXZ:
    case DriveFamily::SixOpXXX: {
      SixOpAmplitudes a;
      const std::pair<const char*, double*> fields[] = {{"alpha", &a.alpha}, {"beta", &a.beta},
                                                        {"p", &a.p},         {"q", &a.q},
                                                        {"u", &a.u},         {"v", &a.v}};
      for (const auto& [key, dst] : fields) {
        const std::string path = std::string("drive.") + key;
        if (!j.contains(key)) throw InvalidInput(path + " is required");
        *dst = number(j[key], path);
        if (*dst < 0.0) {
          throw InvalidInput(path + " = " + fmt(*dst) + " out of range: " + key + " >= 0");
        }
      }
      return family == DriveFamily::SixOpXXZ ? six_op_xxz_drive(a) : six_op_xxx_drive(a);
    }
  }
  throw InvalidInput("unknown drive family");
}

const json& either(const json& doc, const char* a, const char* b) {
  if (doc.contains(a) && doc.contains(b)) {
    throw InvalidInput(std::string("give only one of ") + a + " and " + b);
  }
  return doc.contains(a) ? doc[a] : doc[b];
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::Solve: return "solve";
    case Experiment::OneWay: return "one_way";
    case Experiment::Benchmark3: return "benchmark3";
    case Experiment::ParityScan: return "parity_scan";
    case Experiment::SymmetrySuite: return "symmetry_suite";
  }
  return "unknown";
}

Experiment experiment_from_string(std::string_view name) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '-', '_');
  for (auto e : {Experiment::Solve, Experiment::OneWay, Experiment::Benchmark3,
                 Experiment::ParityScan, Experiment::SymmetrySuite}) {
    if (to_string(e) == n) return e;
  }
  throw InvalidInput("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

OutputFormat output_format_from_string(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw InvalidInput("unknown output format '" + std::string(name) + "' (json or csv)");
}

ChainModel default_parity_model() { return make_xxz(1.0, {0.95, 1.05}); }

RunConfig parse_config(const json& doc) {
  require_object(doc, "config");
  if (!doc.contains("experiment")) throw InvalidInput("missing key: experiment");
  RunConfig c;
  c.experiment = experiment_from_string(text_value(doc["experiment"], "experiment"));

  std::vector<std::string> unknown;
  collect_unknown(doc, "", top_level_keys(c.experiment), unknown);
  if (doc.contains("model")) collect_unknown(doc["model"], "model", kModelKeys, unknown);
  if (doc.contains("solver")) collect_unknown(doc["solver"], "solver", kSolverKeys, unknown);
  if (doc.contains("output")) collect_unknown(doc["output"], "output", kOutputKeys, unknown);
  if (doc.contains("drive") && doc["drive"].is_object() && doc["drive"].contains("family") &&
      doc["drive"]["family"].is_string()) {
    const auto family = drive_family_from_string(doc["drive"]["family"].get<std::string>());
    collect_unknown(doc["drive"], "drive", drive_keys(family), unknown);
  }
  if (!unknown.empty()) {
    throw InvalidInput("unknown keys for experiment " + std::string(to_string(c.experiment)) +
                       ": " + join(unknown));
  }

  if (doc.contains("solver")) {
    const json& s = require_object(doc["solver"], "solver");
    if (s.contains("rank_tolerance")) {
      c.solver.rank_tolerance =
          positive(s["rank_tolerance"], "solver.rank_tolerance", "rank_tolerance");
    }
    if (s.contains("residual_tolerance")) {
      c.solver.residual_tolerance =
          positive(s["residual_tolerance"], "solver.residual_tolerance", "residual_tolerance");
    }
    if (s.contains("time_evolution_crosscheck")) {
      c.solver.time_evolution_crosscheck =
          boolean(s["time_evolution_crosscheck"], "solver.time_evolution_crosscheck");
    }
  }
  if (doc.contains("output")) {
    const json& o = require_object(doc["output"], "output");
    if (o.contains("path")) c.output.path = text_value(o["path"], "output.path");
    if (o.contains("format")) {
      c.output.format = output_format_from_string(text_value(o["format"], "output.format"));
    }
  }
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_unsigned()) throw InvalidInput("seed must be a nonnegative integer");
    c.seed = s.get<std::uint64_t>();
  }

  switch (c.experiment) {
    case Experiment::Solve:
    case Experiment::OneWay: {
      if (!doc.contains("model")) throw InvalidInput("missing key: model");
      if (!doc.contains("drive")) throw InvalidInput("missing key: drive");
      c.model = parse_model(doc["model"], c.experiment == Experiment::OneWay ? 3 : 2);
      c.drive = parse_drive(doc["drive"]);
      if (!is_compatible(c.model->kind, c.drive->family)) {
        try {
          check_compatible(c.model->kind, c.drive->family);
        } catch (const InvalidInput& e) {
          throw InvalidInput(std::string("incompatible model and drive: ") + e.what());
        }
      }
      break;
    }
    case Experiment::Benchmark3: {
      auto& b = c.benchmark;
      if (doc.contains("Delta") || doc.contains("Δ")) b.Delta = number(either(doc, "Delta", "Δ"), "Delta");
      if (doc.contains("delta") || doc.contains("δ")) b.delta = number(either(doc, "delta", "δ"), "delta");
      if (doc.contains("f")) b.f = in_unit_interval(doc["f"], "f", "f");
      if (doc.contains("B")) b.B = number(doc["B"], "B");
      break;
    }
    case Experiment::ParityScan: {
      c.model = doc.contains("model") ? parse_model(doc["model"], 3) : default_parity_model();
      if (c.model->has_field()) throw InvalidInput("parity_scan requires B = 0 (model.field)");
      if (doc.contains("gamma")) c.parity.gamma = positive(doc["gamma"], "gamma", "gamma");
      if (doc.contains("f_grid")) {
        const json& g = doc["f_grid"];
        if (!g.is_array() || g.empty()) throw InvalidInput("f_grid must be a nonempty array");
        c.parity.f_grid.clear();
        for (std::size_t i = 0; i < g.size(); ++i) {
          c.parity.f_grid.push_back(
              in_unit_interval(g[i], "f_grid[" + std::to_string(i) + "]", "f"));
        }
      }
      break;
    }
    case Experiment::SymmetrySuite: {
      auto& s = c.suite;
      if (doc.contains("sizes")) {
        const json& g = doc["sizes"];
        if (!g.is_array() || g.empty()) throw InvalidInput("sizes must be a nonempty array");
        s.sizes.clear();
        for (std::size_t i = 0; i < g.size(); ++i) {
          s.sizes.push_back(int_in(g[i], "sizes[" + std::to_string(i) + "]", "n_sites", 3,
                                   kMaxSuperoperatorSites));
        }
      }
      if (doc.contains("theta_samples")) {
        s.theta_samples = int_in(doc["theta_samples"], "theta_samples", "theta_samples", 1, 4096);
      }
      if (doc.contains("amplitude_draws")) {
        s.amplitude_draws =
            int_in(doc["amplitude_draws"], "amplitude_draws", "amplitude_draws", 1, 4096);
      }
      if (doc.contains("end_to_end")) s.end_to_end = boolean(doc["end_to_end"], "end_to_end");
      break;
    }
  }
  return c;
}

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

ordered_json model_to_json(const ChainModel& model) {
  ordered_json j;
  j["kind"] = model.kind == ModelKind::XXZ ? "xxz" : "xxx";
  j["n_sites"] = model.n_sites;
  if (model.kind == ModelKind::XXZ) {
    j["alpha"] = model.alpha.at(0);
    j["delta"] = model.delta;
  } else {
    j["alpha"] = model.alpha;
  }
  if (model.has_field()) {
    j["field"] = model.field;
  } else {
    j["field"] = 0.0;
  }
  return j;
}

ordered_json drive_to_json(const DriveSpec& drive) {
  ordered_json j;
  j["family"] = std::string(to_string(drive.family));
  switch (drive.family) {
    case DriveFamily::ZTarget: {
      const auto& p = drive.z_target();
      j["gamma"] = p.gamma;
      j["f_left"] = p.f_left;
      j["f_right"] = p.f_right;
      break;
    }
    case DriveFamily::TwistedXY:
    case DriveFamily::TwistedZX: {
      const auto& p = drive.twisted();
      j["gamma"] = p.gamma;
      j["f"] = p.f;
      j["theta"] = p.theta;
      j["inverted"] = p.inverted;
      break;
    }
    case DriveFamily::SixOpXXZ:
    case DriveFamily::SixOpXXX: {
      const auto& a = drive.six_op();
      j["alpha"] = a.alpha;
      j["beta"] = a.beta;
      j["p"] = a.p;
      j["q"] = a.q;
      j["u"] = a.u;
      j["v"] = a.v;
      break;
    }
  }
  return j;
}

ordered_json resolved_config(const RunConfig& c) {
  ordered_json j;
  j["experiment"] = std::string(to_string(c.experiment));
  switch (c.experiment) {
    case Experiment::Solve:
    case Experiment::OneWay:
      j["model"] = model_to_json(c.model.value());
      j["drive"] = drive_to_json(c.drive.value());
      break;
    case Experiment::Benchmark3:
      j["Delta"] = c.benchmark.Delta;
      j["delta"] = c.benchmark.delta;
      j["f"] = c.benchmark.f;
      j["B"] = c.benchmark.B;
      break;
    case Experiment::ParityScan:
      j["model"] = model_to_json(c.model.value_or(default_parity_model()));
      j["gamma"] = c.parity.gamma;
      j["f_grid"] = c.parity.f_grid;
      break;
    case Experiment::SymmetrySuite:
      j["sizes"] = c.suite.sizes;
      j["theta_samples"] = c.suite.theta_samples;
      j["amplitude_draws"] = c.suite.amplitude_draws;
      j["end_to_end"] = c.suite.end_to_end;
      break;
  }
  j["solver"] = {{"rank_tolerance", c.solver.rank_tolerance},
                 {"residual_tolerance", c.solver.residual_tolerance},
                 {"time_evolution_crosscheck", c.solver.time_evolution_crosscheck}};
  j["output"] = {{"path", c.output.path}, {"format", std::string(to_string(c.output.format))}};
  j["seed"] = c.seed;
  return j;
}

}  // namespace spinchain
