#include "spheroid/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "spheroid/errors.hpp"
#include "spheroid/special_functions.hpp"

namespace spheroid {

namespace {

constexpr std::size_t kScanPoints = 4096;
constexpr double kRootTolerance = 1e-12;
constexpr double kDegenerateTolerance = 1e-10;

void require_positive_radius(double radius, const char* what) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::domain_error(std::string(what) + ": radius must be finite and positive");
  }
}

// (R coth R - 1) / R^2 = I_{3/2}(R) / (R I_{1/2}(R)), and its derivative
// from the Riccati equation q' = 1 - 2q/R - q^2 for q = I_{3/2}/I_{1/2}.
double shape_factor(double radius) { return bessel_ratio(0, radius) / radius; }

double shape_factor_prime(double radius) {
  const double q = bessel_ratio(0, radius);
  const double q_prime = 1.0 - 2.0 * q / radius - q * q;
  return q_prime / radius - q / (radius * radius);
}

double scan_upper(double gamma) { return std::max(100.0, 10.0 * gamma); }

// Bisection on a sign change of g over [lo, hi] down to an absolute width of
// 1e-12, followed by one Newton polish.
template <class F, class DF>
double bracketed_root(F g, DF dg, double lo, double hi) {
  auto tol = [](double a, double b) { return std::abs(b - a) <= kRootTolerance; };
  std::uintmax_t max_iter = 400;
  auto [a, b] = boost::math::tools::bisect(g, lo, hi, tol, max_iter);
  double root = 0.5 * (a + b);
  const double slope = dg(root);
  if (slope != 0.0 && std::isfinite(slope)) {
    const double polished = root - g(root) / slope;
    if (polished >= lo && polished <= hi && std::abs(g(polished)) <= std::abs(g(root))) {
      root = polished;
    }
  }
  return root;
}

}  // namespace

const char* to_string(Branch branch) {
  return branch == Branch::Smaller ? "smaller" : "larger";
}

double f_of_R(double gamma, double radius) {
  require_positive_radius(radius, "f_of_R");
  return (1.0 - gamma / radius) * shape_factor(radius);
}

double f_prime_of_R(double gamma, double radius) {
  require_positive_radius(radius, "f_prime_of_R");
  return gamma / (radius * radius) * shape_factor(radius) +
         (1.0 - gamma / radius) * shape_factor_prime(radius);
}

double f_prime_from_mode_weights(double gamma, double radius) {
  require_positive_radius(radius, "f_prime_from_mode_weights");
  const double q = bessel_ratio(0, radius);
  const double h0 = -q / radius;
  const double j0 = 1.0 - 3.0 * q / radius - q * q;
  return -(gamma * (h0 + j0) - j0 * radius) / (radius * radius);
}

ThetaStar theta_star(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::domain_error("theta_star: gamma must be finite and positive");
  }
  const double lo = gamma * (1.0 + 1e-12);
  const double hi = scan_upper(gamma);
  const double step = std::log(hi / lo) / static_cast<double>(kScanPoints - 1);

  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kScanPoints; ++i) {
    const double radius = lo * std::exp(step * static_cast<double>(i));
    const double value = f_of_R(gamma, radius);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  if (best == 0 || best + 1 == kScanPoints) {
    throw NumericalFailure("theta_star: maximum of f not bracketed for gamma = " + std::to_string(gamma));
  }
  const double left = lo * std::exp(step * static_cast<double>(best - 1));
  const double right = lo * std::exp(step * static_cast<double>(best + 1));

  // Refine on the zero of f'; f' > 0 left of the maximum, < 0 right of it.
  auto df = [gamma](double r) { return f_prime_of_R(gamma, r); };
  if (!(df(left) > 0.0 && df(right) < 0.0)) {
    throw NumericalFailure("theta_star: derivative does not change sign across the scanned maximum");
  }
  auto tol = [](double a, double b) { return std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(a); };
  std::uintmax_t max_iter = 200;
  auto [a, b] = boost::math::tools::toms748_solve(df, left, right, tol, max_iter);
  const double argmax = 0.5 * (a + b);
  return {3.0 * f_of_R(gamma, argmax), argmax};
}

StationaryState stationary_state_at(const ModelParams& params, double radius) {
  StationaryState state;
  state.params = params;
  state.radius = radius;
  state.f_value = f_of_R(params.gamma, radius);
  state.f_prime = f_prime_of_R(params.gamma, radius);
  state.branch = state.f_prime > 0.0 ? Branch::Smaller : Branch::Larger;
  return state;
}

std::vector<StationaryState> solve_stationary(const ModelParams& params) {
  params.validate();
  const double gamma = params.gamma;
  const double level = params.theta() / 3.0;
  const ThetaStar peak = theta_star(gamma);

  if (std::abs(params.theta() - peak.theta_star) < kDegenerateTolerance) {
    StationaryState state = stationary_state_at(params, peak.argmax_radius);
    state.degenerate = true;
    return {state};
  }
  if (params.theta() > peak.theta_star) {
    return {};
  }

  auto g = [&](double r) { return f_of_R(gamma, r) - level; };
  auto dg = [&](double r) { return f_prime_of_R(gamma, r); };

  // f(gamma) = 0 < level < f(argmax): the smaller root sits between them.
  const double smaller = bracketed_root(g, dg, gamma, peak.argmax_radius);

  // f decays like 1/R, so a finite upper bracket always exists.
  double hi = scan_upper(gamma);
  while (g(hi) >= 0.0) {
    hi *= 2.0;
    if (!std::isfinite(hi) || hi > 1e15) {
      throw NumericalFailure("solve_stationary: larger root not bracketed");
    }
  }
  const double larger = bracketed_root(g, dg, peak.argmax_radius, hi);

  StationaryState s1 = stationary_state_at(params, smaller);
  StationaryState s2 = stationary_state_at(params, larger);
  s1.branch = Branch::Smaller;
  s2.branch = Branch::Larger;
  return {s1, s2};
}

double sigma_tilde_for_radius(double sigma_bar, double gamma, double radius) {
  require_positive_radius(radius, "sigma_tilde_for_radius");
  return 3.0 * sigma_bar * (1.0 - gamma / radius) * shape_factor(radius);
}

std::vector<double> uniform_grid(double radius, std::size_t n) {
  if (n < 2) {
    throw std::domain_error("uniform_grid: need at least two points");
  }
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = radius * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  grid.back() = radius;
  return grid;
}

double sinh_ratio(double r, double radius) {
  // R / sinh R = 2 R e^{-R} / (1 - e^{-2R})
  const double r_over_sinh_r = 2.0 * radius * std::exp(-radius) / (-std::expm1(-2.0 * radius));
  if (r < 1e-4) {
    return (1.0 + r * r / 6.0) * r_over_sinh_r;
  }
  // (R/r) e^{r-R} (1 - e^{-2r}) / (1 - e^{-2R})
  return (radius / r) * std::exp(r - radius) * (-std::expm1(-2.0 * r)) / (-std::expm1(-2.0 * radius));
}

namespace {

void check_grid(std::span<const double> grid, double radius) {
  for (double r : grid) {
    if (!(r >= 0.0) || r > radius * (1.0 + 1e-12)) {
      throw std::domain_error("radial profile: grid point outside [0, R_s]");
    }
  }
}

}  // namespace

RadialProfile sigma_profile(const StationaryState& state, std::span<const double> grid) {
  check_grid(grid, state.radius);
  const auto& p = state.params;
  const double boundary = p.sigma_bar * (1.0 - p.gamma / state.radius);
  RadialProfile out{{grid.begin(), grid.end()}, {}, ProfileKind::Nutrient};
  out.values.reserve(grid.size());
  for (double r : grid) {
    out.values.push_back(boundary * sinh_ratio(r, state.radius));
  }
  return out;
}

RadialProfile pressure_profile(const StationaryState& state, std::span<const double> grid) {
  check_grid(grid, state.radius);
  const auto& p = state.params;
  const double radius = state.radius;
  const double boundary = p.mu * p.sigma_bar * (1.0 - p.gamma / radius);
  RadialProfile out{{grid.begin(), grid.end()}, {}, ProfileKind::Pressure};
  out.values.reserve(grid.size());
  for (double r : grid) {
    out.values.push_back(-boundary * sinh_ratio(r, radius) + p.mu * p.sigma_tilde * r * r / 6.0 + p.p_bar +
                         boundary - p.mu * p.sigma_tilde * radius * radius / 6.0);
  }
  return out;
}

}  // namespace spheroid
