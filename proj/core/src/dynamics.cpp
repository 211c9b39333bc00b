#include "spheroid/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "spheroid/errors.hpp"
#include "spheroid/spectrum.hpp"
#include "spheroid/special_functions.hpp"

namespace spheroid {

namespace {

constexpr double kNoiseFloor = 1e-13;
constexpr std::size_t kMinTailSamples = 10;

// mu [sigma_bar (R - gamma) g(R) - sigma_tilde R / 3] with the even function
// g(R) = I_{3/2}(R) / (R I_{1/2}(R)), g(0) = 1/3. Smooth through R = 0, so
// trial stages that overshoot the extinction guard stay finite.
double radial_velocity_extended(const ModelParams& p, double radius) {
  const double a = std::abs(radius);
  const double g = a > 0.0 ? bessel_ratio(0, a) / a : 1.0 / 3.0;
  return p.mu * (p.sigma_bar * (radius - p.gamma) * g - p.sigma_tilde * radius / 3.0);
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be finite and positive");
  }
}

}  // namespace

double radial_rhs(const ModelParams& params, double radius) {
  require_positive(radius, "radial_rhs: radius");
  return params.mu * radius * (params.sigma_bar * f_of_R(params.gamma, radius) - params.sigma_tilde / 3.0);
}

SimulationTrace integrate_radial(const ModelParams& params, double r0, double t_end, double dt_init,
                                 const RadialOptions& options) {
  namespace odeint = boost::numeric::odeint;
  params.validate();
  require_positive(r0, "integrate_radial: R0");
  require_positive(t_end, "integrate_radial: t_end");
  require_positive(dt_init, "integrate_radial: dt_init");
  if (options.samples < 2) throw std::invalid_argument("integrate_radial: need at least two samples");

  SimulationTrace trace;
  trace.metadata.kind = TraceKind::Radial;
  trace.metadata.params = params;
  trace.metadata.initial_radius = r0;

  const auto states = solve_stationary(params);
  if (states.size() == 2 && r0 >= states[0].radius) {
    trace.limit = r0 == states[0].radius ? states[0].radius : states[1].radius;
  } else if (states.size() == 1 && r0 >= states[0].radius) {
    trace.limit = states[0].radius;
  }

  using State = std::array<double, 1>;
  auto system = [&params](const State& x, State& dxdt, double /*t*/) {
    dxdt[0] = radial_velocity_extended(params, x[0]);
  };
  auto stepper = odeint::make_dense_output(options.abs_tol, options.rel_tol, odeint::runge_kutta_dopri5<State>());

  State x{r0};
  stepper.initialize(x, 0.0, dt_init);

  const auto n = options.samples;
  std::size_t next = 0;
  auto sample_time = [&](std::size_t i) { return t_end * static_cast<double>(i) / static_cast<double>(n - 1); };
  auto record = [&](double t, double value) {
    trace.times.push_back(t);
    trace.values.push_back(value);
  };

  bool stop = false;
  auto guard = [&](double value) {
    if (value < options.extinction_radius) {
      trace.metadata.extinct = true;
      stop = true;
    } else if (value > options.blowup_radius) {
      trace.metadata.blew_up = true;
      stop = true;
    }
  };

  record(0.0, r0);
  ++next;
  guard(r0);
  try {
    while (!stop && next < n) {
      stepper.do_step(system);
      const double t_now = stepper.current_time();
      const double dt = stepper.current_time_step();
      if (!(dt > 1e-14 * std::max(1.0, std::abs(t_now)))) {
        throw NumericalFailure("integrate_radial: step size underflow at t = " + std::to_string(t_now));
      }
      while (next < n && sample_time(next) <= t_now) {
        State xs{};
        stepper.calc_state(sample_time(next), xs);
        record(sample_time(next), xs[0]);
        ++next;
        guard(xs[0]);
        if (stop) break;
      }
      if (!stop) guard(stepper.current_state()[0]);
    }
  } catch (const NumericalFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw NumericalFailure(std::string("integrate_radial: ") + e.what());
  }
  for (double v : trace.values) {
    if (!std::isfinite(v)) throw NumericalFailure("integrate_radial: non-finite radius");
  }

  if (trace.limit && !stop) {
    try {
      trace.fitted_rate = fit_decay_rate(trace, options.tail_fraction);
    } catch (const InsufficientSignal&) {
    }
  }
  return trace;
}

SimulationTrace integrate_linear_modes(const StationaryState& state, std::span<const double> initial_amplitudes,
                                       double t_end, std::size_t samples, double tail_fraction) {
  require_positive(t_end, "integrate_linear_modes: t_end");
  if (samples < 2) throw std::invalid_argument("integrate_linear_modes: need at least two samples");
  for (double c : initial_amplitudes) {
    if (!std::isfinite(c)) throw std::invalid_argument("integrate_linear_modes: amplitudes must be finite");
  }

  SimulationTrace trace;
  trace.metadata.kind = TraceKind::LinearModes;
  trace.metadata.params = state.params;
  trace.metadata.stationary_radius = state.radius;
  trace.metadata.initial_amplitudes.assign(initial_amplitudes.begin(), initial_amplitudes.end());

  const auto coeffs = coefficients(state);
  std::vector<double>& lambdas = trace.metadata.lambdas;
  for (unsigned k = 0; k < initial_amplitudes.size(); ++k) {
    lambdas.push_back(k == 1 ? 0.0 : lambda_k_direct(coeffs, state, k));
  }

  std::vector<std::size_t> excited;
  for (std::size_t k = 0; k < initial_amplitudes.size(); ++k) {
    if (initial_amplitudes[k] != 0.0) {
      excited.push_back(k);
      trace.columns.emplace_back("c_" + std::to_string(k), std::vector<double>{});
    }
  }
  trace.columns.emplace_back("aggregate", std::vector<double>{});

  for (std::size_t i = 0; i < samples; ++i) {
    const double t = t_end * static_cast<double>(i) / static_cast<double>(samples - 1);
    double transient = 0.0;
    double aggregate = 0.0;
    for (std::size_t e = 0; e < excited.size(); ++e) {
      const std::size_t k = excited[e];
      const double c = initial_amplitudes[k] * std::exp(-lambdas[k] * t);
      trace.columns[e].second.push_back(c);
      aggregate += std::abs(c);
      if (k != 1) transient += std::abs(c);
    }
    trace.columns.back().second.push_back(aggregate);
    trace.times.push_back(t);
    trace.values.push_back(transient);
  }
  trace.limit = 0.0;
  try {
    trace.fitted_rate = fit_decay_rate(trace, tail_fraction);
  } catch (const InsufficientSignal&) {
  }
  return trace;
}

double fit_decay_rate(const SimulationTrace& trace, double tail_fraction) {
  if (!trace.limit) throw std::invalid_argument("fit_decay_rate: trace has no known limit");
  if (!(tail_fraction > 0.0 && tail_fraction < 1.0)) {
    throw std::invalid_argument("fit_decay_rate: tail_fraction must lie in (0, 1)");
  }
  const std::size_t n = trace.values.size();
  const auto first = static_cast<std::size_t>(std::floor((1.0 - tail_fraction) * static_cast<double>(n)));
  const double floor = kNoiseFloor * std::max(1.0, std::abs(*trace.limit));

  std::vector<double> t;
  std::vector<double> log_dev;
  double dev_min = 0.0;
  double dev_max = 0.0;
  for (std::size_t i = std::min(first, n); i < n; ++i) {
    const double dev = std::abs(trace.values[i] - *trace.limit);
    if (!(dev > floor) || !std::isfinite(dev)) continue;
    dev_min = t.empty() ? dev : std::min(dev_min, dev);
    dev_max = t.empty() ? dev : std::max(dev_max, dev);
    t.push_back(trace.times[i]);
    log_dev.push_back(std::log(dev));
  }
  if (t.size() < kMinTailSamples) {
    throw InsufficientSignal("fit_decay_rate: fewer than 10 tail samples above the noise floor");
  }
  bool decreasing = true;
  bool increasing = true;
  for (std::size_t i = 1; i < log_dev.size(); ++i) {
    decreasing = decreasing && log_dev[i] < log_dev[i - 1];
    increasing = increasing && log_dev[i] > log_dev[i - 1];
  }
  if (!(decreasing || increasing) || dev_max < 10.0 * dev_min) {
    throw InsufficientSignal("fit_decay_rate: tail is not monotone over at least one decade");
  }

  const double m = static_cast<double>(t.size());
  double t_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    t_mean += t[i];
    y_mean += log_dev[i];
  }
  t_mean /= m;
  y_mean /= m;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sxy += (t[i] - t_mean) * (log_dev[i] - y_mean);
    sxx += (t[i] - t_mean) * (t[i] - t_mean);
  }
  return -sxy / sxx;
}

}  // namespace spheroid
