#pragma once

#include <string>

#include <json.hpp>

#include "spinchain/config.hpp"
#include "spinchain/harness.hpp"

namespace spinchain {

/// Version string written to meta.version.
std::string_view version();

nlohmann::ordered_json to_json(const SolveReport& r, const ChainModel& model,
                               const DriveSpec& drive);
nlohmann::ordered_json to_json(const OneWayResult& r);
nlohmann::ordered_json to_json(const BenchmarkResult& r);
nlohmann::ordered_json to_json(const ParityRow& r);
nlohmann::ordered_json to_json(const SymmetryRow& r);

/// Runs the configured experiment and returns {meta, results}.
nlohmann::ordered_json run_experiment(const RunConfig& config);

/// JSON text with every floating-point value at 17 significant digits and
/// non-finite values as null. Output ends with a newline.
std::string dump_json(const nlohmann::ordered_json& doc, int indent = 2);

/// Header plus one line per result record. Only flat records (parity_scan,
/// symmetry_suite) are accepted; others throw InvalidInput.
std::string dump_csv(const nlohmann::ordered_json& doc);

/// Runs the experiment and writes the formatted document to config.output.path,
/// or returns it when the path is empty.
std::string run(const RunConfig& config);

}  // namespace spinchain
