#pragma once

#include <span>
#include <vector>

#include "spheroid/model.hpp"

namespace spheroid {

enum class Branch { Smaller, Larger };

const char* to_string(Branch branch);

/// A radial stationary solution: a root R_s of f(R) = theta / 3.
struct StationaryState {
  ModelParams params;
  double radius = 0.0;
  Branch branch = Branch::Larger;
  double f_value = 0.0;
  double f_prime = 0.0;
  /// Tangency root (theta within 1e-10 of theta_*); the two branches merge.
  bool degenerate = false;
};

/// f(R) = (1 - gamma/R) (R coth R - 1) / R^2.
/// Throws std::domain_error for R <= 0.
double f_of_R(double gamma, double radius);
inline double f_of_R(const ModelParams& params, double radius) { return f_of_R(params.gamma, radius); }

/// Analytic derivative of f.
double f_prime_of_R(double gamma, double radius);
inline double f_prime_of_R(const ModelParams& params, double radius) {
  return f_prime_of_R(params.gamma, radius);
}

/// f'(R) through the mode weights: -(1/R^2) [gamma (h_0 + j_0) - j_0 R].
double f_prime_from_mode_weights(double gamma, double radius);

struct ThetaStar {
  double theta_star = 0.0;
  double argmax_radius = 0.0;
};

/// theta_*(gamma) = 3 max_{R > gamma} f(R) and the maximizing radius.
/// Throws std::domain_error for gamma <= 0 and NumericalFailure if the
/// maximum cannot be bracketed.
ThetaStar theta_star(double gamma);

/// All stationary radii for the given parameters: two states ordered
/// Smaller, Larger when theta < theta_*; a single degenerate state when
/// |theta - theta_*| < 1e-10; none otherwise.
std::vector<StationaryState> solve_stationary(const ModelParams& params);

/// The stationary state at a known root radius (branch chosen by the sign of
/// f'). Does not check that radius is a root.
StationaryState stationary_state_at(const ModelParams& params, double radius);

/// Apoptosis threshold that makes `radius` a stationary radius:
/// sigma_tilde = 3 sigma_bar (1 - gamma/R) I_{3/2}(R) / (R I_{1/2}(R)).
double sigma_tilde_for_radius(double sigma_bar, double gamma, double radius);

enum class ProfileKind { Nutrient, Pressure, ModeA, ModeB };

struct RadialProfile {
  std::vector<double> grid;
  std::vector<double> values;
  ProfileKind kind = ProfileKind::Nutrient;
};

/// Uniform grid of n points on [0, R] (n >= 2).
std::vector<double> uniform_grid(double radius, std::size_t n);

/// sigma_s(r) = sigma_bar (1 - gamma/R_s) R_s sinh r / (r sinh R_s).
/// Throws std::domain_error if any grid point lies outside [0, R_s].
RadialProfile sigma_profile(const StationaryState& state, std::span<const double> grid);

/// Stationary pressure p_s(r); p_s(R_s) = p_bar.
RadialProfile pressure_profile(const StationaryState& state, std::span<const double> grid);

/// R sinh r / (r sinh R) without overflow for large R; removable singularity
/// at r = 0 handled by series.
double sinh_ratio(double r, double radius);

}  // namespace spheroid
