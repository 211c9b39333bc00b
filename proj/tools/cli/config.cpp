#include "cli/config.hpp"

#include <cmath>
#include <sstream>

namespace spheroid::cli {

namespace {

using nlohmann::json;

double require_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) {
    throw ConfigError("missing required field '" + where + "." + key + "'");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ConfigError("field '" + where + "." + key + "' must be a number");
  }
  return v.get<double>();
}

template <class T>
void read_optional(const json& obj, const char* key, T& target, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return;
  try {
    target = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("field '" + where + "." + key + "' has the wrong type");
  }
}

unsigned read_unsigned(const json& obj, const char* key, unsigned fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("field '" + where + "." + key + "' must be a non-negative integer");
  }
  return static_cast<unsigned>(v.get<long long>());
}

}  // namespace

void apply_config_document(const json& doc, RunConfig& config) {
  if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
  if (!doc.contains("model") || !doc.at("model").is_object()) {
    throw ConfigError("missing required object 'model'");
  }
  const json& model = doc.at("model");
  config.params.sigma_bar = require_number(model, "sigma_bar", "model");
  config.params.sigma_tilde = require_number(model, "sigma_tilde", "model");
  config.params.mu = require_number(model, "mu", "model");
  config.params.gamma = require_number(model, "gamma", "model");
  config.params.p_bar = require_number(model, "p_bar", "model");

  if (config.command.empty() || !doc.contains(config.command)) return;
  const json& section = doc.at(config.command);
  if (!section.is_object()) throw ConfigError("section '" + config.command + "' must be an object");
  const std::string& where = config.command;

  if (section.contains("branch")) {
    if (!section.at("branch").is_string()) throw ConfigError("field '" + where + ".branch' must be a string");
    config.branch = parse_branch(section.at("branch").get<std::string>());
  }
  config.k_max = read_unsigned(section, "k_max", config.k_max, where);
  config.grid = read_unsigned(section, "grid", static_cast<unsigned>(config.grid), where);
  config.samples = read_unsigned(section, "samples", static_cast<unsigned>(config.samples), where);
  if (section.contains("t_end")) config.t_end = require_number(section, "t_end", where);
  if (section.contains("r0")) config.r0 = require_number(section, "r0", where);
  if (section.contains("tolerance_scale")) config.tolerance_scale = require_number(section, "tolerance_scale", where);
  if (section.contains("mode")) {
    if (!section.at("mode").is_string()) throw ConfigError("field '" + where + ".mode' must be a string");
    config.simulate_mode = parse_simulate_mode(section.at("mode").get<std::string>());
  }
  if (section.contains("modes")) {
    std::string text;
    read_optional(section, "modes", text, where);
    config.modes = parse_modes(text);
  }
}

std::vector<std::pair<unsigned, double>> parse_modes(const std::string& text) {
  std::vector<std::pair<unsigned, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("mode entry '" + item + "' is not of the form k:amp");
    try {
      std::size_t used = 0;
      const long k = std::stol(item.substr(0, colon), &used);
      if (used != colon || k < 0) throw ConfigError("bad mode index in '" + item + "'");
      const std::string amp_text = item.substr(colon + 1);
      const double amp = std::stod(amp_text, &used);
      if (used != amp_text.size() || !std::isfinite(amp)) throw ConfigError("bad amplitude in '" + item + "'");
      out.emplace_back(static_cast<unsigned>(k), amp);
    } catch (const std::logic_error&) {
      throw ConfigError("mode entry '" + item + "' is not of the form k:amp");
    }
  }
  return out;
}

std::string format_modes(const std::vector<std::pair<unsigned, double>>& modes) {
  std::string out;
  for (const auto& [k, amp] : modes) {
    if (!out.empty()) out += ',';
    std::ostringstream os;
    os.precision(17);
    os << k << ':' << amp;
    out += os.str();
  }
  return out;
}

Branch parse_branch(const std::string& text) {
  if (text == "smaller") return Branch::Smaller;
  if (text == "larger") return Branch::Larger;
  throw ConfigError("branch must be 'smaller' or 'larger', got '" + text + "'");
}

SimulateMode parse_simulate_mode(const std::string& text) {
  if (text == "radial") return SimulateMode::Radial;
  if (text == "linear-modes") return SimulateMode::LinearModes;
  throw ConfigError("simulate mode must be 'radial' or 'linear-modes', got '" + text + "'");
}

const char* to_string(SimulateMode mode) {
  return mode == SimulateMode::Radial ? "radial" : "linear-modes";
}

json model_to_json(const ModelParams& params) {
  return json{{"sigma_bar", params.sigma_bar},
              {"sigma_tilde", params.sigma_tilde},
              {"mu", params.mu},
              {"gamma", params.gamma},
              {"p_bar", params.p_bar}};
}

json command_section_to_json(const RunConfig& config) {
  json section = json::object();
  if (config.command == "spectrum" || config.command == "threshold") {
    section["k_max"] = config.k_max;
  }
  if (config.command == "spectrum") section["branch"] = to_string(config.branch);
  if (config.command == "verify") {
    section["grid"] = config.grid;
    section["tolerance_scale"] = config.tolerance_scale;
  }
  if (config.command == "simulate") {
    section["mode"] = to_string(config.simulate_mode);
    section["branch"] = to_string(config.branch);
    section["samples"] = config.samples;
    if (config.t_end) section["t_end"] = *config.t_end;
    if (config.r0) section["r0"] = *config.r0;
    if (!config.modes.empty()) section["modes"] = format_modes(config.modes);
  }
  return section;
}

void validate(const RunConfig& config) {
  try {
    config.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (config.k_max < 2) throw ConfigError("k_max must be at least 2");
  if (config.grid < 64) throw ConfigError("grid must be at least 64");
  if (config.samples < 2) throw ConfigError("samples must be at least 2");
  if (config.t_end && !(*config.t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (config.r0 && !(*config.r0 > 0.0)) throw ConfigError("r0 must be positive");
  if (!(config.tolerance_scale > 0.0)) throw ConfigError("tolerance_scale must be positive");
}

}  // namespace spheroid::cli
