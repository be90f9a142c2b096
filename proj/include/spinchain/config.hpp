#pragma once

// Run configuration: JSON ingestion with defaults and validation, and the
// canonical resolved form embedded in every result file.
//
// Top-level keys common to all experiments:
//   experiment   "solve" | "one_way" | "benchmark3" | "parity_scan" | "symmetry_suite"
//   solver       { rank_tolerance, residual_tolerance, time_evolution_crosscheck }
//   output       { path, format: "json" | "csv" }
//   seed         nonnegative integer
//
// solve, one_way:   model, drive
// benchmark3:       Delta (or Δ), delta (or δ), f, B
// parity_scan:      model (optional), gamma, f_grid
// symmetry_suite:   sizes, theta_samples, amplitude_draws, end_to_end

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinchain/chain_model.hpp"
#include "spinchain/drives.hpp"

namespace spinchain {

enum class Experiment { Solve, OneWay, Benchmark3, ParityScan, SymmetrySuite };

std::string_view to_string(Experiment e);
/// Accepts underscores or hyphens ("one_way", "one-way").
Experiment experiment_from_string(std::string_view name);

enum class OutputFormat { Json, Csv };

std::string_view to_string(OutputFormat f);
OutputFormat output_format_from_string(std::string_view name);

struct SolverConfig {
  double rank_tolerance = 1e-10;
  double residual_tolerance = 1e-10;
  bool time_evolution_crosscheck = false;
};

struct OutputConfig {
  std::string path;  // empty: standard output
  OutputFormat format = OutputFormat::Json;
};

struct BenchmarkConfig {
  double Delta = 1.0;
  double delta = 0.0;
  double f = 0.1;
  double B = 0.0;
};

struct ParityConfig {
  double gamma = 1.0;
  /// Each entry is scanned as the pair (f, -f).
  std::vector<double> f_grid = {0.05, 0.1, 0.2};
};

struct SuiteConfig {
  std::vector<int> sizes = {3, 4, 5};
  int theta_samples = 8;
  int amplitude_draws = 10;
  bool end_to_end = true;
};

struct RunConfig {
  Experiment experiment = Experiment::Solve;
  /// Set for solve, one_way and parity_scan.
  std::optional<ChainModel> model;
  /// Set for solve and one_way.
  std::optional<DriveSpec> drive;
  SolverConfig solver;
  OutputConfig output;
  std::uint64_t seed = 42;
  BenchmarkConfig benchmark;
  ParityConfig parity;
  SuiteConfig suite;
};

/// Default parity-scan model: N = 3 XXZ, alpha = 1, Delta = (0.95, 1.05).
ChainModel default_parity_model();

/// Throws InvalidInput listing every unknown key, naming the field and bound
/// on range violations, and on model/drive pairings that are not defined.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config(std::string_view text);
inline RunConfig parse_config(const std::string& text) { return parse_config(std::string_view(text)); }
inline RunConfig parse_config(const char* text) { return parse_config(std::string_view(text)); }

/// Fully explicit form; parse_config(resolved_config(c)) reproduces c.
nlohmann::ordered_json resolved_config(const RunConfig& config);

nlohmann::ordered_json model_to_json(const ChainModel& model);
nlohmann::ordered_json drive_to_json(const DriveSpec& drive);

}  // namespace spinchain
