#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spheroid/model.hpp"
#include "spheroid/stationary.hpp"

namespace spheroid::cli {

enum class OutputFormat { Csv, Json };

enum class SimulateMode { Radial, LinearModes };

/// Everything a subcommand needs. Populated from an optional JSON config
/// document and then overridden by command-line flags.
struct RunConfig {
  std::string command;
  ModelParams params;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;
  std::optional<std::string> summary_path;

  Branch branch = Branch::Larger;
  unsigned k_max = 64;
  std::size_t grid = 4096;
  std::optional<double> t_end;
  std::optional<double> r0;
  SimulateMode simulate_mode = SimulateMode::Radial;
  std::vector<std::pair<unsigned, double>> modes;
  std::size_t samples = 2001;
  double tolerance_scale = 1.0;
};

/// Thrown for malformed configuration documents or option values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads `model` (all five fields required) and the section named after
/// `config.command` from a JSON document. Unknown top-level keys are ignored
/// so emitted summaries can be fed back in.
void apply_config_document(const nlohmann::json& doc, RunConfig& config);

/// Parses "k:amp,k:amp,...".
std::vector<std::pair<unsigned, double>> parse_modes(const std::string& text);
std::string format_modes(const std::vector<std::pair<unsigned, double>>& modes);

Branch parse_branch(const std::string& text);
SimulateMode parse_simulate_mode(const std::string& text);
const char* to_string(SimulateMode mode);

nlohmann::json model_to_json(const ModelParams& params);

/// The command section of `config` in the same schema the reader accepts.
nlohmann::json command_section_to_json(const RunConfig& config);

/// Checks option ranges (k_max >= 2, grid >= 64, positive t_end / r0, ...).
void validate(const RunConfig& config);

}  // namespace spheroid::cli
