#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/output.hpp"
#include "cli/verify_suite.hpp"
#include "spheroid/dynamics.hpp"
#include "spheroid/errors.hpp"
#include "spheroid/spectrum.hpp"
#include "spheroid/stationary.hpp"

namespace spheroid::cli {

namespace {

using nlohmann::json;

constexpr const char* kNoEquilibria = "no equilibria (theta >= theta_*)";

json document_head(const RunConfig& config) {
  json doc;
  doc["command"] = config.command;
  doc["model"] = model_to_json(config.params);
  doc[config.command] = command_section_to_json(config);
  return doc;
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string branch_label(const StationaryState& s) { return s.degenerate ? "degenerate" : to_string(s.branch); }

json state_to_json(const StationaryState& s) {
  return json{{"branch", branch_label(s)}, {"R_s", s.radius}, {"f_value", s.f_value}, {"f_prime", s.f_prime}};
}

const StationaryState* pick_branch(const std::vector<StationaryState>& states, Branch branch) {
  for (const auto& s : states) {
    if (!s.degenerate && s.branch == branch) return &s;
  }
  return nullptr;
}

double json_number(double v) { return v; }

}  // namespace

int cmd_stationary(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto& p = config.params;
  const ThetaStar peak = theta_star(p.gamma);
  const auto states = solve_stationary(p);

  if (config.format == OutputFormat::Json) {
    json doc = document_head(config);
    json results{{"theta", p.theta()}, {"theta_star", peak.theta_star}, {"argmax_R", peak.argmax_radius}};
    results["states"] = json::array();
    for (const auto& s : states) results["states"].push_back(state_to_json(s));
    if (states.empty()) results["message"] = kNoEquilibria;
    doc["results"] = results;
    emit_json(out, doc);
  } else {
    CsvWriter csv(out);
    csv.header({"branch", "R_s", "f_value", "f_prime"});
    for (const auto& s : states) {
      csv.row({branch_label(s), csv_number(s.radius), csv_number(s.f_value), csv_number(s.f_prime)});
    }
    csv.comment("theta", csv_number(p.theta()));
    csv.comment("theta_star", csv_number(peak.theta_star));
    csv.comment("argmax_R", csv_number(peak.argmax_radius));
    for (const auto& s : states) {
      csv.comment("f_prime_sign_" + branch_label(s), s.f_prime > 0.0 ? "+" : (s.f_prime < 0.0 ? "-" : "0"));
    }
    if (states.empty()) csv.comment("message", kNoEquilibria);
  }
  if (states.empty()) {
    err << kNoEquilibria << '\n';
    return kNoResult;
  }
  return kOk;
}

int cmd_threshold(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto& p = config.params;
  const ThetaStar peak = theta_star(p.gamma);
  const StabilityReport report = classify(p, config.k_max);
  const auto critical = critical_adhesiveness(p);

  if (config.format == OutputFormat::Json) {
    json doc = document_head(config);
    json results{{"theta", p.theta()}, {"theta_star", peak.theta_star}, {"argmax_R", peak.argmax_radius}};
    results["critical_gamma"] = critical ? json(*critical) : json(nullptr);
    results["branches"] = json::array();
    for (const auto& b : report.branches) {
      results["branches"].push_back({{"branch", branch_label(b.state)},
                                     {"R_s", b.state.radius},
                                     {"gamma_star", b.gamma_star},
                                     {"attained_k", b.gamma_star_k},
                                     {"classification", to_string(b.classification)}});
    }
    if (report.branches.empty()) results["message"] = kNoEquilibria;
    doc["results"] = results;
    emit_json(out, doc);
  } else {
    CsvWriter csv(out);
    csv.header({"branch", "R_s", "gamma_star", "attained_k", "classification"});
    for (const auto& b : report.branches) {
      csv.row({branch_label(b.state), csv_number(b.state.radius), csv_number(b.gamma_star),
               std::to_string(b.gamma_star_k), to_string(b.classification)});
    }
    csv.comment("theta", csv_number(p.theta()));
    csv.comment("theta_star", csv_number(peak.theta_star));
    csv.comment("argmax_R", csv_number(peak.argmax_radius));
    csv.comment("critical_gamma", critical ? csv_number(*critical) : "none");
    if (report.branches.empty()) csv.comment("message", kNoEquilibria);
  }
  if (report.branches.empty()) {
    err << kNoEquilibria << '\n';
    return kNoResult;
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto states = solve_stationary(config.params);
  const StationaryState* state = pick_branch(states, config.branch);
  if (!state) {
    err << (states.empty() ? std::string(kNoEquilibria)
                           : std::string("no ") + to_string(config.branch) + " branch for these parameters")
        << '\n';
    return kNoResult;
  }
  const ModeSpectrum s = compute_spectrum(*state, config.k_max);
  const BranchReport report = classify_state(*state, config.k_max);
  auto gamma_at = [&](unsigned k) {
    return k < s.thresholds.gamma_k.size() ? s.thresholds.gamma_k[k] : std::nan("");
  };

  if (config.format == OutputFormat::Json) {
    json doc = document_head(config);
    json modes = json::array();
    for (unsigned k = 0; k <= s.k_max; ++k) {
      const double g = gamma_at(k);
      modes.push_back({{"k", k},
                       {"lambda_direct", s.lambdas[k]},
                       {"lambda_hj", s.lambdas_hj[k]},
                       {"h_k", s.h[k]},
                       {"j_k", s.j[k]},
                       {"gamma_k", std::isnan(g) ? json(nullptr) : json(g)}});
    }
    json results{{"branch", to_string(state->branch)},
                 {"R_s", state->radius},
                 {"gamma_star", s.thresholds.gamma_star},
                 {"attained_k", s.thresholds.attained_at},
                 {"scanned_to", s.thresholds.scanned_to},
                 {"classification", to_string(s.classification)},
                 {"unstable_modes", report.unstable_modes},
                 {"reason", report.reason},
                 {"modes", modes}};
    if (report.spectral_gap) results["spectral_gap"] = *report.spectral_gap;
    doc["results"] = results;
    emit_json(out, doc);
  } else {
    CsvWriter csv(out);
    csv.header({"k", "lambda_direct", "lambda_hj", "h_k", "j_k", "gamma_k"});
    for (unsigned k = 0; k <= s.k_max; ++k) {
      csv.row({std::to_string(k), csv_number(s.lambdas[k]), csv_number(s.lambdas_hj[k]), csv_number(s.h[k]),
               csv_number(s.j[k]), csv_number(gamma_at(k))});
    }
    csv.comment("branch", to_string(state->branch));
    csv.comment("R_s", csv_number(state->radius));
    csv.comment("gamma_star", csv_number(s.thresholds.gamma_star));
    csv.comment("attained_k", std::to_string(s.thresholds.attained_at));
    csv.comment("classification", to_string(s.classification));
    std::string unstable;
    for (unsigned k : report.unstable_modes) unstable += (unstable.empty() ? "" : " ") + std::to_string(k);
    csv.comment("unstable_modes", unstable.empty() ? "none" : unstable);
  }
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (solve_stationary(config.params).empty()) {
    err << kNoEquilibria << '\n';
    return kNoResult;
  }
  const auto checks = run_verify_suite(config.params, {config.grid, config.tolerance_scale});
  const bool all = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });

  if (config.format == OutputFormat::Json) {
    json doc = document_head(config);
    json list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name},
                      {"measured", json_number(c.measured)},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed},
                      {"detail", c.detail}});
    }
    doc["results"] = {{"checks", list}, {"all_passed", all}};
    emit_json(out, doc);
  } else {
    CsvWriter csv(out);
    csv.header({"check", "measured", "tolerance", "status"});
    for (const auto& c : checks) {
      csv.row({c.name, csv_number(c.measured), csv_number(c.tolerance), c.passed ? "pass" : "FAIL"});
    }
  }
  if (!all) {
    err << "verification failed:";
    for (const auto& c : checks) {
      if (!c.passed) err << ' ' << c.name;
    }
    err << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& summary, std::ostream& err) {
  const auto& p = config.params;
  const auto states = solve_stationary(p);
  RunConfig used = config;
  SimulationTrace trace;
  json results;

  if (config.simulate_mode == SimulateMode::Radial) {
    const StationaryState* larger = pick_branch(states, Branch::Larger);
    double expected = std::nan("");
    if (larger) expected = lambda_k_direct(coefficients(*larger), *larger, 0);
    if (!used.r0) {
      if (!larger) {
        err << "simulate: --r0 is required when there is no larger stationary branch\n";
        return kUsageError;
      }
      used.r0 = 1.05 * larger->radius;
    }
    if (!used.t_end) used.t_end = larger && expected > 0.0 ? 12.0 / expected : 100.0;
    RadialOptions options;
    options.samples = used.samples;
    trace = integrate_radial(p, *used.r0, *used.t_end, 1e-3 * *used.t_end, options);
    results["expected_rate"] = std::isnan(expected) ? json(nullptr) : json(expected);
  } else {
    const StationaryState* state = pick_branch(states, config.branch);
    if (!state) {
      err << (states.empty() ? std::string(kNoEquilibria) : std::string("no ") + to_string(config.branch) + " branch")
          << '\n';
      return kNoResult;
    }
    if (used.modes.empty()) used.modes = {{0, 1e-2}, {1, 1e-2}, {2, 1e-2}};
    unsigned k_top = 0;
    for (const auto& [k, amp] : used.modes) k_top = std::max(k_top, k);
    std::vector<double> amplitudes(k_top + 1, 0.0);
    for (const auto& [k, amp] : used.modes) amplitudes[k] = amp;

    const auto coeffs = coefficients(*state);
    double slowest = 0.0;
    std::optional<double> gap;
    for (const auto& [k, amp] : used.modes) {
      if (k == 1 || amp == 0.0) continue;
      const double lambda = lambda_k_direct(coeffs, *state, k);
      slowest = std::max(slowest, 1.0 / std::abs(lambda));
      if (lambda > 0.0 && (!gap || lambda < *gap)) gap = lambda;
    }
    if (!used.t_end) used.t_end = slowest > 0.0 ? 20.0 * slowest : 10.0;
    trace = integrate_linear_modes(*state, amplitudes, *used.t_end, used.samples);
    results["branch"] = to_string(state->branch);
    results["R_s"] = state->radius;
    json lambdas = json::object();
    for (const auto& [k, amp] : used.modes) lambdas[std::to_string(k)] = trace.metadata.lambdas[k];
    results["lambdas"] = lambdas;
    results["spectral_gap"] = gap ? json(*gap) : json(nullptr);
  }

  results["fitted_rate"] = trace.fitted_rate ? json(*trace.fitted_rate) : json(nullptr);
  results["limit"] = trace.limit ? json(*trace.limit) : json(nullptr);
  results["extinct"] = trace.metadata.extinct;
  results["blew_up"] = trace.metadata.blew_up;
  results["samples"] = trace.times.size();

  std::vector<std::string> names{"time", config.simulate_mode == SimulateMode::Radial ? "R" : "transient_norm"};
  for (const auto& [name, column] : trace.columns) names.push_back(name);

  json doc = document_head(used);
  if (config.format == OutputFormat::Json) {
    json series = json::object();
    series["time"] = trace.times;
    series[names[1]] = trace.values;
    for (const auto& [name, column] : trace.columns) series[name] = column;
    results["series"] = series;
    doc["results"] = results;
    emit_json(out, doc);
  } else {
    CsvWriter csv(out);
    csv.header(names);
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
      std::vector<std::string> row{csv_number(trace.times[i]), csv_number(trace.values[i])};
      for (const auto& [name, column] : trace.columns) row.push_back(csv_number(column[i]));
      csv.row(row);
    }
    doc["results"] = results;
    emit_json(summary, doc);
  }
  return kOk;
}

namespace {

struct Flags {
  std::string config_path;
  std::string output_path;
  std::string summary_path;
  std::string format;
  std::string branch;
  std::string mode;
  std::string modes;
  std::optional<unsigned> k_max;
  std::optional<std::size_t> grid;
  std::optional<std::size_t> samples;
  std::optional<double> t_end;
  std::optional<double> r0;
  std::optional<double> tolerance_scale;
  std::optional<double> sigma_bar, sigma_tilde, mu, gamma, p_bar;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "JSON config file");
  sub->add_option("--output", f.output_path, "Output file (default: stdout)");
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--sigma-bar", f.sigma_bar, "External nutrient concentration");
  sub->add_option("--sigma-tilde", f.sigma_tilde, "Apoptosis threshold");
  sub->add_option("--mu", f.mu, "Proliferation rate");
  sub->add_option("--gamma", f.gamma, "Cell-to-cell adhesiveness");
  sub->add_option("--p-bar", f.p_bar, "External pressure");
}

RunConfig build_config(const std::string& command, const Flags& f) {
  RunConfig config;
  config.command = command;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw ConfigError("cannot open config file '" + f.config_path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    apply_config_document(doc, config);
  }
  if (f.sigma_bar) config.params.sigma_bar = *f.sigma_bar;
  if (f.sigma_tilde) config.params.sigma_tilde = *f.sigma_tilde;
  if (f.mu) config.params.mu = *f.mu;
  if (f.gamma) config.params.gamma = *f.gamma;
  if (f.p_bar) config.params.p_bar = *f.p_bar;
  if (!f.format.empty()) config.format = f.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (!f.output_path.empty()) config.output_path = f.output_path;
  if (!f.summary_path.empty()) config.summary_path = f.summary_path;
  if (!f.branch.empty()) config.branch = parse_branch(f.branch);
  if (!f.mode.empty()) config.simulate_mode = parse_simulate_mode(f.mode);
  if (!f.modes.empty()) config.modes = parse_modes(f.modes);
  if (f.k_max) config.k_max = *f.k_max;
  if (f.grid) config.grid = *f.grid;
  if (f.samples) config.samples = *f.samples;
  if (f.t_end) config.t_end = *f.t_end;
  if (f.r0) config.r0 = *f.r0;
  if (f.tolerance_scale) config.tolerance_scale = *f.tolerance_scale;
  validate(config);
  return config;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stationary states, linearized spectrum and stability thresholds of a tumor-spheroid "
               "free-boundary model with Gibbs-Thomson boundary condition"};
  app.require_subcommand(1);
  Flags f;

  auto* stationary = app.add_subcommand("stationary", "Stationary radii, f' signs, theta and theta_*");
  auto* threshold = app.add_subcommand("threshold", "theta_*, gamma_* per branch and the critical adhesiveness");
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues Lambda_k, h_k, j_k, gamma_k for one branch");
  auto* verify = app.add_subcommand("verify", "Run the oracle cross-check suite");
  auto* simulate = app.add_subcommand("simulate", "Radial ODE or linearized mode evolution");
  for (auto* sub : {stationary, threshold, spectrum, verify, simulate}) add_common(sub, f);

  threshold->add_option("--k-max", f.k_max, "Minimum number of modes scanned");
  spectrum->add_option("--branch", f.branch, "smaller or larger")->check(CLI::IsMember({"smaller", "larger"}));
  spectrum->add_option("--k-max", f.k_max, "Largest mode index reported");
  verify->add_option("--grid", f.grid, "Finest finite-difference grid");
  verify->add_option("--tolerance-scale", f.tolerance_scale, "Multiply every tolerance");
  simulate->add_option("--mode", f.mode, "radial or linear-modes")->check(CLI::IsMember({"radial", "linear-modes"}));
  simulate->add_option("--branch", f.branch, "Branch for linear-modes")->check(CLI::IsMember({"smaller", "larger"}));
  simulate->add_option("--t-end", f.t_end, "Time horizon");
  simulate->add_option("--r0", f.r0, "Initial radius (radial mode)");
  simulate->add_option("--modes", f.modes, "Initial amplitudes, \"k:amp,...\" (linear-modes)");
  simulate->add_option("--samples", f.samples, "Number of output samples");
  simulate->add_option("--summary", f.summary_path, "JSON summary path (CSV format)");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const RunConfig config = build_config(command, f);

    std::ofstream file;
    std::ostream* target = &out;
    if (config.output_path) {
      file.open(*config.output_path);
      if (!file) throw ConfigError("cannot write output file '" + *config.output_path + "'");
      target = &file;
    }

    if (command == "stationary") return cmd_stationary(config, *target, err);
    if (command == "threshold") return cmd_threshold(config, *target, err);
    if (command == "spectrum") return cmd_spectrum(config, *target, err);
    if (command == "verify") return cmd_verify(config, *target, err);

    std::ofstream summary_file;
    std::ostream* summary = &err;
    std::optional<std::string> summary_path = config.summary_path;
    if (!summary_path && config.output_path) summary_path = *config.output_path + ".summary.json";
    if (summary_path && config.format == OutputFormat::Csv) {
      summary_file.open(*summary_path);
      if (!summary_file) throw ConfigError("cannot write summary file '" + *summary_path + "'");
      summary = &summary_file;
    }
    return cmd_simulate(config, *target, *summary, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: numerical failure: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace spheroid::cli
