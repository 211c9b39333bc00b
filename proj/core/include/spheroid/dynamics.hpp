#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spheroid/model.hpp"
#include "spheroid/stationary.hpp"

namespace spheroid {

enum class TraceKind { Radial, LinearModes };

struct TraceMetadata {
  TraceKind kind = TraceKind::Radial;
  ModelParams params;
  double initial_radius = 0.0;                  // radial runs
  double stationary_radius = 0.0;               // linear-mode runs: R_s of the state
  std::vector<double> initial_amplitudes;       // linear-mode runs, indexed by k
  std::vector<double> lambdas;                  // linear-mode runs, indexed by k
  bool extinct = false;                         // radius fell below the extinction guard
  bool blew_up = false;                         // radius exceeded the blow-up guard
};

/// Sampled time series. `values` is the primary observable: R(t) for radial
/// runs, the norm sum_{k != 1} |c_k(t)| of the non-kernel amplitudes for
/// linear-mode runs. `limit` is the value the observable is expected to
/// approach (when known). Further named series live in `columns`.
struct SimulationTrace {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<std::pair<std::string, std::vector<double>>> columns;
  std::optional<double> limit;
  std::optional<double> fitted_rate;
  TraceMetadata metadata;
};

/// dR/dt = mu R [sigma_bar f(R) - sigma_tilde / 3], the boundary velocity of a
/// radially symmetric tumor. Throws std::domain_error for R <= 0.
double radial_rhs(const ModelParams& params, double radius);

struct RadialOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::size_t samples = 2001;
  double extinction_radius = 1e-6;
  double blowup_radius = 1e3;
  double tail_fraction = 0.5;
};

/// Adaptive Dormand-Prince integration of the radial ODE, sampled uniformly
/// on [0, t_end]. Stops early at the extinction / blow-up guards. Sets
/// `limit` to the attracting equilibrium R_s2 when R0 lies in its basin
/// (R0 > R_s1) and attempts a decay-rate fit.
/// Throws NumericalFailure on step-size underflow.
SimulationTrace integrate_radial(const ModelParams& params, double r0, double t_end, double dt_init,
                                 const RadialOptions& options = {});

/// Exact evolution c_k(t) = c_k(0) exp(-Lambda_k t) of the linearized
/// boundary dynamics on each spherical-harmonic degree k; Lambda_1 is the
/// translation kernel and is taken as exactly zero.
SimulationTrace integrate_linear_modes(const StationaryState& state, std::span<const double> initial_amplitudes,
                                       double t_end, std::size_t samples = 2001, double tail_fraction = 0.5);

/// Decay rate from a log-linear least-squares fit of |value - limit| over the
/// final `tail_fraction` of the samples; negative for growth.
/// Throws std::invalid_argument when the trace has no limit or tail_fraction
/// is outside (0, 1), and InsufficientSignal when fewer than 10 tail samples
/// lie above the noise floor 1e-13 max(1, |limit|) or the tail is not
/// monotone over at least
/// one decade.
double fit_decay_rate(const SimulationTrace& trace, double tail_fraction);

}  // namespace spheroid
