#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperzeta/cyclo.hpp"
#include "hyperzeta/laurent.hpp"
#include "hyperzeta/quaternion.hpp"
#include "hyperzeta/series.hpp"

namespace hyperzeta::cli {

using nlohmann::json;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitBudgetExceeded = 3,
};

const std::vector<std::string>& known_commands();

/// Command-line overrides applied on top of the job file.
struct Overrides {
  std::optional<unsigned> D;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> output;
  bool timestamp = true;
};

/// Parsed polynomial part of a job: field, variable count and equations.
struct JobSystem {
  FieldPtr field;
  PolySystem system;
  std::vector<std::uint64_t> character_indices;
};

struct Outcome {
  int exit_code = kExitOk;
  json report;
};

/// Runs `command` on an already parsed job document. Never throws; errors
/// become an "error" object in the report and a nonzero exit code.
Outcome run(const std::string& command, const json& job, const Overrides& ov);

/// Reads the job file first; unreadable or malformed files exit with 2.
Outcome run_file(const std::string& command, const std::filesystem::path& job_path, const Overrides& ov);

struct SelftestResult {
  int exit_code = kExitOk;
  std::string table;
  json report;
};

/// Fixed identity battery over q in {2, 3, 5}. With timing off every wall
/// time is reported as zero, making the output byte-identical across runs.
SelftestResult selftest(bool timing);

// Parsing helpers shared with the tests.
JobSystem parse_system(const json& job);
Elem parse_coefficient(const Field& f, const json& c);
Quaternion parse_quaternion(const json& q);

// Serialization.
json to_json(const CycloNumber& c);
json to_json(const ExactSeries& s);
json to_json(const Quaternion& q);
json complex_json(std::complex<double> z);
std::string render(const json& report);

}  // namespace hyperzeta::cli
