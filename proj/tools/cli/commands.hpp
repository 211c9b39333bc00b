#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace spheroid::cli {

/// Exit-code protocol shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kNoResult = 2,
  kVerificationFailed = 3,
};

// Each command writes its table / document to `out` (the file named by
// --output is opened by run_cli) and diagnostics to `err`.
int cmd_stationary(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_threshold(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
/// `summary` receives the JSON summary when the format is CSV.
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& summary, std::ostream& err);

/// Full command-line entry point: args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spheroid::cli
