#pragma once

// Batch driver behind orlicz-cli. Each subcommand turns an effective JSON
// config (config file merged with command-line flags) into verification
// reports, writes them as JSON-lines, CSV and a summary JSON, and returns an
// exit code.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlicz/report.hpp"

namespace orlicz::cli {

enum ExitCode : int {
  kAllPass = 0,
  kSomeFailed = 1,
  kUsageError = 2,
  kRuntimeError = 3,
};

// Thrown for missing or malformed configuration; mapped to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One report plus its expected-outcome annotation ("pass" or "fail").
struct Row {
  VerificationReport report;
  std::string expected = "pass";
  bool ok() const { return report.pass == (expected == "pass"); }
};

struct CommandResult {
  std::vector<Row> rows;
  nlohmann::json summary = nlohmann::json::object();
  // Optional plot-ready table replacing the default report CSV.
  std::string csv_header;
  std::vector<std::string> csv_rows;
};

using Command = std::function<CommandResult(const nlohmann::json& config)>;

CommandResult luxemburg_norm(const nlohmann::json& config);
CommandResult besov_norm(const nlohmann::json& config);
CommandResult check_conditions(const nlohmann::json& config);
CommandResult verify_sampling(const nlohmann::json& config);
CommandResult check_lemmas(const nlohmann::json& config);
CommandResult extrapolate(const nlohmann::json& config);
// config: {"inputs": [paths of .jsonl files]}
CommandResult report(const nlohmann::json& config);

// Writes <out>.jsonl, <out>.csv and <out>.json (and <out>.timing.json when
// timing is requested). Returns the exit code implied by the rows.
int write_outputs(const std::string& command, const CommandResult& result, const std::string& out,
                  bool timing, double wall_time_s);

// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace orlicz::cli
