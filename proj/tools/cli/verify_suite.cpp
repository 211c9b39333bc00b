#include "cli/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spheroid/dynamics.hpp"
#include "spheroid/mode_oracle.hpp"
#include "spheroid/special_functions.hpp"
#include "spheroid/spectrum.hpp"
#include "spheroid/stationary.hpp"

namespace spheroid::cli {

namespace {

class Suite {
 public:
  explicit Suite(double scale) : scale_(scale) {}

  void add(std::string name, double measured, double tolerance, std::string detail = {}) {
    const double tol = tolerance * scale_;
    results_.push_back({std::move(name), measured, tol, std::isfinite(measured) && measured <= tol, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  double scale_;
  std::vector<CheckResult> results_;
};

double rel(double a, double b, double floor) { return std::abs(a - b) / std::max(floor, std::abs(b)); }

void check_bessel(Suite& suite) {
  double recurrence = 0.0;
  double ratio = 0.0;
  for (unsigned m = 1; m <= 50; ++m) {
    for (double r = 0.25; r <= 50.0; r += 0.25) {
      const double lower = bessel_half(m - 1, r);
      const double mid = bessel_half(m, r);
      const double upper = bessel_half(m + 1, r);
      recurrence = std::max(recurrence, std::abs(lower - upper - (2.0 * m + 1.0) / r * mid) / lower);
    }
  }
  for (unsigned k = 0; k <= 50; ++k) {
    for (double r = 0.25; r <= 50.0; r += 0.25) {
      const double lo = bessel_half(k, r);
      const double hi = bessel_half(k + 1, r);
      if (lo == 0.0 || !std::isfinite(hi / lo)) continue;
      ratio = std::max(ratio, rel(bessel_ratio(k, r), hi / lo, 0.0));
    }
  }
  suite.add("bessel_two_recurrence", recurrence, 1e-9, "m in [1,50], r in (0,50]");
  suite.add("bessel_ratio_vs_quotient", ratio, 1e-12, "k in [0,50], r in (0,50]");
}

void check_stationary(Suite& suite, const ModelParams& params, const std::vector<StationaryState>& states) {
  double residual = 0.0;
  double dual = 0.0;
  double sign_violations = 0.0;
  for (const auto& s : states) {
    residual = std::max(residual, std::abs(f_of_R(params, s.radius) - params.theta() / 3.0));
    dual = std::max(dual, rel(f_prime_from_mode_weights(params.gamma, s.radius), s.f_prime, 1e-300));
    if (!s.degenerate) {
      if (s.branch == Branch::Smaller && !(s.f_prime > 0.0)) sign_violations += 1.0;
      if (s.branch == Branch::Larger && !(s.f_prime < 0.0)) sign_violations += 1.0;
      if (!(s.radius > params.gamma)) sign_violations += 1.0;
    }
  }
  if (states.size() == 2 && !(states[0].radius < states[1].radius)) sign_violations += 1.0;
  suite.add("stationary_root_residual", residual, 1e-12);
  suite.add("stationary_branch_signs", sign_violations, 0.0, "violations of f'(R_s1) > 0 > f'(R_s2)");
  suite.add("f_prime_dual_route", dual, 1e-8);
}

void check_spectrum(Suite& suite, const std::vector<StationaryState>& states) {
  double kernel = 0.0;
  double lambda0 = 0.0;
  double dual = 0.0;
  double j_violations = 0.0;
  for (const auto& s : states) {
    const auto c = coefficients(s);
    const auto& p = s.params;
    const double l0 = lambda_k_direct(c, s, 0);
    kernel = std::max(kernel, std::abs(lambda_k_direct(c, s, 1)) / std::max(1.0, std::abs(l0)));
    lambda0 = std::max(lambda0, std::abs(l0 + p.mu * p.sigma_bar * s.radius * s.f_prime) / (1.0 + std::abs(l0)));
    for (unsigned k = 2; k <= 200; ++k) {
      const double direct = lambda_k_direct(c, s, k);
      dual = std::max(dual, std::abs(direct - lambda_k_hj(s, k)) / std::max(1.0, std::abs(direct)));
    }
    if (!(h_j_of_k(s, 0).j < 0.0)) j_violations += 1.0;
    if (!(std::abs(h_j_of_k(s, 1).j) < 1e-12)) j_violations += 1.0;
    for (unsigned k = 2; k <= 200; ++k) {
      if (!(h_j_of_k(s, k).j > 0.0)) j_violations += 1.0;
    }
  }
  suite.add("translation_mode_zero", kernel, 1e-10, "|Lambda_1| / max(1, |Lambda_0|)");
  suite.add("lambda0_identity", lambda0, 1e-9, "Lambda_0 = -mu sigma_bar R f'(R)");
  suite.add("dual_formula_spectrum", dual, 1e-9, "k in [2,200]");
  suite.add("j_sign_facts", j_violations, 0.0, "j_0 < 0, j_1 = 0, j_k > 0");
}

void check_mode_oracle(Suite& suite, const std::vector<StationaryState>& states, std::size_t grid) {
  double worst = 0.0;
  double worst_ratio = 0.0;
  for (const auto& s : states) {
    const auto c = coefficients(s);
    for (unsigned k = 0; k <= 20; ++k) {
      const double closed = k == 1 ? 0.0 : lambda_k_direct(c, s, k);
      const double coarse = solve_mode_bvp(s, k, grid / 4).lambda_fd;
      const double mid = solve_mode_bvp(s, k, grid / 2).lambda_fd;
      const auto fine = solve_mode_bvp(s, k, grid);
      const double extrapolated = mode_eigenvalue_extrapolated(s, k, grid);
      worst = std::max(worst, std::abs(extrapolated - closed) / std::max(1.0, std::abs(closed)));
      const double ratio = (coarse - mid) / (mid - fine.lambda_fd);
      worst_ratio = std::max(worst_ratio, std::abs(ratio - 4.0));
    }
  }
  std::ostringstream detail;
  detail << "k in [0,20], n = " << grid;
  suite.add("fd_mode_eigenvalues", worst, 1e-6, detail.str());
  suite.add("fd_grid_convergence", worst_ratio, 0.5, "|refinement ratio - 4|");
}

void check_curvature(Suite& suite, double radius) {
  double worst = 0.0;
  const double thetas[] = {0.0, 0.3, 0.9, 1.4, 2.2, std::numbers::pi};
  for (unsigned k : {0u, 1u, 2u, 3u, 5u, 8u}) {
    const double coef = linearized_curvature(radius, k);
    const double scale = std::max(std::abs(coef), 1.0 / (radius * radius));
    for (double theta : thetas) {
      const double expected = coef * legendre(k, std::cos(theta));
      const double measured = curvature_directional_derivative(radius, k, theta);
      worst = std::max(worst, std::abs(measured - expected) / scale);
    }
  }
  suite.add("curvature_linearization", worst, 1e-4, "k in {0,1,2,3,5,8}");
}

void check_radial_law(Suite& suite, const ModelParams& params, const std::vector<StationaryState>& states,
                      std::size_t grid) {
  const double lo = 0.5 * states.front().radius;
  const double hi = 2.0 * states.back().radius;
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double radius = lo * std::pow(hi / lo, (i + 0.5) / 10.0);
    const double formula = radial_rhs(params, radius);
    const double scale = params.mu * radius * std::max(params.sigma_bar * std::abs(f_of_R(params, radius)),
                                                        params.sigma_tilde / 3.0);
    worst = std::max(worst, std::abs(radial_velocity_fd(params, radius, grid) - formula) / scale);
  }
  suite.add("radial_rhs_fd", worst, 1e-6, "10 radii in (R_s1/2, 2 R_s2)");
}

void check_radial_rate(Suite& suite, const ModelParams& params, const StationaryState& larger) {
  const double lambda0 = lambda_k_direct(coefficients(larger), larger, 0);
  const auto trace = integrate_radial(params, 1.05 * larger.radius, 12.0 / lambda0, 1e-3 / lambda0);
  const double measured = trace.fitted_rate ? std::abs(*trace.fitted_rate - lambda0) / lambda0 : HUGE_VAL;
  suite.add("radial_decay_rate", measured, 0.02, "R0 = 1.05 R_s2, rate vs Lambda_0");
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const ModelParams& params, const VerifyOptions& options) {
  params.validate();
  Suite suite(options.tolerance_scale);
  const auto states = solve_stationary(params);

  check_bessel(suite);
  if (!states.empty()) {
    check_stationary(suite, params, states);
    check_spectrum(suite, states);
    check_mode_oracle(suite, states, options.grid);
    check_curvature(suite, states.back().radius);
    check_radial_law(suite, params, states, options.grid);
    if (states.size() == 2) check_radial_rate(suite, params, states[1]);
  }
  return suite.take();
}

}  // namespace spheroid::cli
