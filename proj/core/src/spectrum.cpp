#include "spheroid/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "spheroid/errors.hpp"
#include "spheroid/special_functions.hpp"

namespace spheroid {

namespace {

constexpr unsigned kTailConfirmations = 50;
constexpr double kTailSafety = 8.0;

double mode_factor(unsigned k) { return static_cast<double>(k) * (k + 1.0); }

}  // namespace

LinearizationCoefficients coefficients(const StationaryState& state) {
  const auto& p = state.params;
  const double radius = state.radius;
  const double r2 = radius * radius;
  LinearizationCoefficients c;
  c.c1 = p.mu * p.gamma * p.sigma_bar / (2.0 * r2);
  c.c2 = p.mu * p.gamma * p.sigma_bar / r2 - p.mu * p.sigma_tilde * radius / 3.0;
  c.c3 = -p.mu * (p.sigma_bar * (1.0 - p.gamma / radius) - p.sigma_tilde);
  return c;
}

double lambda_k_direct(const LinearizationCoefficients& coeffs, const StationaryState& state, unsigned k) {
  return -(coeffs.c2 - coeffs.c1 * mode_factor(k)) * bessel_ratio(k, state.radius) + coeffs.c3;
}

ModeWeights h_j_of_k(double radius, unsigned k) {
  const double ratio0 = bessel_ratio(0, radius);
  const double ratio_k = bessel_ratio(k, radius);
  ModeWeights w;
  w.h = (0.5 * mode_factor(k) - 1.0) * ratio_k / radius;
  w.j = 1.0 - 3.0 * ratio0 / radius - ratio0 * ratio_k;
  return w;
}

double lambda_k_hj(const StationaryState& state, unsigned k) {
  const auto& p = state.params;
  const ModeWeights w = h_j_of_k(state.radius, k);
  return p.mu * p.sigma_bar / state.radius * (p.gamma * (w.h + w.j) - w.j * state.radius);
}

double linearized_curvature(double radius, unsigned k) {
  return -(1.0 - 0.5 * mode_factor(k)) / (radius * radius);
}

GammaThresholds gamma_thresholds(double radius, unsigned k_max) {
  if (k_max < 2) {
    throw std::domain_error("gamma_thresholds: k_max must be at least 2");
  }
  GammaThresholds out;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  out.gamma_k = {nan, nan};
  out.gamma_star = -std::numeric_limits<double>::infinity();

  unsigned confirmations = 0;
  for (unsigned k = 2;; ++k) {
    const ModeWeights w = h_j_of_k(radius, k);
    const double g = w.j * radius / (w.h + w.j);
    out.gamma_k.push_back(g);
    if (g > out.gamma_star) {
      out.gamma_star = g;
      out.attained_at = k;
    }
    out.scanned_to = k;
    if (k >= k_max) {
      if (kTailSafety * radius / k < out.gamma_star) {
        ++confirmations;
      } else {
        confirmations = 0;
      }
      if (confirmations >= kTailConfirmations) break;
    }
    if (k > 10'000'000) {
      throw NumericalFailure("gamma_thresholds: tail bound never dropped below the running maximum");
    }
  }
  return out;
}

const char* to_string(Stability stability) {
  return stability == Stability::Stable ? "stable" : "unstable";
}

ModeSpectrum compute_spectrum(const StationaryState& state, unsigned k_max) {
  if (k_max < 2) {
    throw std::domain_error("compute_spectrum: k_max must be at least 2");
  }
  ModeSpectrum s;
  s.state = state;
  s.k_max = k_max;
  s.coeffs = coefficients(state);
  s.lambdas.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) {
    s.lambdas.push_back(lambda_k_direct(s.coeffs, state, k));
    s.lambdas_hj.push_back(lambda_k_hj(state, k));
    const ModeWeights w = h_j_of_k(state.radius, k);
    s.h.push_back(w.h);
    s.j.push_back(w.j);
  }
  s.thresholds = gamma_thresholds(state.radius, k_max);
  s.classification = classify_state(state, k_max).classification;
  return s;
}

BranchReport classify_state(const StationaryState& state, unsigned k_max) {
  BranchReport report;
  report.state = state;
  const auto coeffs = coefficients(state);
  report.lambda0 = lambda_k_direct(coeffs, state, 0);
  const GammaThresholds thresholds = gamma_thresholds(state.radius, std::max(k_max, 2u));
  report.gamma_star = thresholds.gamma_star;
  report.gamma_star_k = thresholds.attained_at;

  // Lambda_1 is the translation kernel and is excluded. Beyond scanned_to
  // every gamma_k lies below gamma_*, so sign(Lambda_k) = sign(gamma - gamma_k)
  // is settled by comparing with gamma_*.
  std::vector<std::pair<double, unsigned>> negative;
  std::optional<std::pair<double, unsigned>> smallest_positive;
  auto consider = [&](unsigned k, double lambda) {
    if (lambda < 0.0) {
      negative.emplace_back(lambda, k);
    } else if (lambda > 0.0 && (!smallest_positive || lambda < smallest_positive->first)) {
      smallest_positive = {lambda, k};
    }
  };
  consider(0, report.lambda0);
  for (unsigned k = 2; k <= thresholds.scanned_to; ++k) {
    consider(k, lambda_k_direct(coeffs, state, k));
  }
  std::sort(negative.begin(), negative.end());
  for (const auto& [lambda, k] : negative) report.unstable_modes.push_back(k);

  if (state.degenerate) {
    report.classification = Stability::Unstable;
    report.reason = "degenerate tangency root: Lambda_0 = 0 and the radial mode is semi-stable";
  } else if (state.branch == Branch::Smaller) {
    report.classification = Stability::Unstable;
    report.reason = "smaller branch: f'(R_s) > 0 so Lambda_0 < 0";
  } else if (!negative.empty()) {
    report.classification = Stability::Unstable;
    report.reason = report.lambda0 < 0.0 ? "Lambda_0 < 0" : "gamma < gamma_*: some Lambda_k < 0 with k >= 2";
  } else if (report.lambda0 == 0.0) {
    report.classification = Stability::Unstable;
    report.reason = "Lambda_0 = 0: linear test inconclusive";
  } else {
    report.classification = Stability::Stable;
    report.reason = "larger branch with gamma > gamma_*: Lambda_k > 0 for k = 0 and all k >= 2";
    if (smallest_positive) {
      report.spectral_gap = smallest_positive->first;
      report.gap_mode = smallest_positive->second;
    }
  }
  return report;
}

StabilityReport classify(const ModelParams& params, unsigned k_max) {
  params.validate();
  StabilityReport report;
  report.params = params;
  report.theta = params.theta();
  report.theta_star = theta_star(params.gamma).theta_star;
  const auto states = solve_stationary(params);
  if (states.empty()) {
    report.message = "no equilibria (theta >= theta_*)";
    return report;
  }
  for (const auto& state : states) {
    report.branches.push_back(classify_state(state, k_max));
  }
  return report;
}

namespace {

// gamma - gamma_*(R_s2(gamma)) at fixed sigma_bar, sigma_tilde; nullopt when
// the larger branch does not exist.
std::optional<double> stability_margin(ModelParams params, double gamma) {
  params.gamma = gamma;
  const auto states = solve_stationary(params);
  if (states.size() != 2) return std::nullopt;
  return gamma - gamma_thresholds(states[1].radius, 2).gamma_star;
}

}  // namespace

std::optional<double> critical_adhesiveness(const ModelParams& params, unsigned scan_points) {
  params.validate();
  const double theta = params.theta();
  if (theta >= 1.0) return std::nullopt;

  // Largest gamma with two equilibria: theta_*(gamma) = theta.
  double hi = 1.0;
  while (theta_star(hi).theta_star > theta) {
    hi *= 2.0;
    if (hi > 1e3) return std::nullopt;
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (theta_star(mid).theta_star > theta ? lo : hi) = mid;
  }
  const double gamma_max = lo;

  std::optional<double> prev_margin;
  double prev_gamma = 0.0;
  for (unsigned i = 1; i <= scan_points; ++i) {
    const double gamma = gamma_max * static_cast<double>(i) / (scan_points + 1.0);
    const auto margin = stability_margin(params, gamma);
    if (!margin) continue;
    if (prev_margin && (*prev_margin < 0.0) != (*margin < 0.0)) {
      double a = prev_gamma;
      double b = gamma;
      const bool a_negative = *prev_margin < 0.0;
      for (int it = 0; it < 100 && b - a > 1e-12 * b; ++it) {
        const double mid = 0.5 * (a + b);
        const auto m = stability_margin(params, mid);
        if (!m) break;
        ((*m < 0.0) == a_negative ? a : b) = mid;
      }
      return 0.5 * (a + b);
    }
    prev_margin = margin;
    prev_gamma = gamma;
  }
  return std::nullopt;
}

}  // namespace spheroid
