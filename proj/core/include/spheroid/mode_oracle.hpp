#pragma once

// Brute-force verification layer: finite-difference solves of the per-mode
// radial boundary-value problems, the closed-form mode profiles they must
// reproduce, and the axisymmetric mean curvature of a perturbed sphere.

#include <span>
#include <utility>
#include <vector>

#include "spheroid/model.hpp"
#include "spheroid/stationary.hpp"

namespace spheroid {

/// Offset radial grid: r_i = (i + 1/2) h for i = 0..n-1 with r_{n-1} = R,
/// h = R / (n - 1/2). The origin is never a node.
struct OffsetGrid {
  double radius = 0.0;
  double h = 0.0;
  std::vector<double> r;
};

OffsetGrid make_offset_grid(double radius, std::size_t n);

/// Solution of  y'' + (2/r) y' - (k(k+1)/r^2) y - shift * y = source(r),
/// y(R) = boundary_value, regular at the origin, by a second-order
/// flux-form finite-difference scheme on an offset grid.
struct RadialSolution {
  OffsetGrid grid;
  std::vector<double> y;        // includes the boundary node
  double slope_at_boundary = 0.0;  // y'(R), 3-point one-sided stencil
};

/// `source` holds one value per interior node (size n - 1).
RadialSolution solve_radial(unsigned k, double shift, std::span<const double> source, double boundary_value,
                            const OffsetGrid& grid);

struct ModeBvpSolution {
  unsigned k = 0;
  std::vector<double> grid;
  double h = 0.0;
  std::vector<double> a;  // nutrient perturbation a_k(r)
  std::vector<double> b;  // pressure perturbation b_k(r)
  double b_prime_at_boundary = 0.0;
  /// b_k'(R) + c3 with unit boundary amplitude.
  double lambda_fd = 0.0;
};

/// Finite-difference solve of the mode-k problems (a first, then b with
/// source -a). Throws std::domain_error for n_grid < 64 and NumericalFailure
/// on a singular system.
ModeBvpSolution solve_mode_bvp(const StationaryState& state, unsigned k, std::size_t n_grid);

/// Two-level Richardson extrapolation of lambda_fd (h^2, then h^3) from grids
/// of n_grid/4, n_grid/2 and n_grid points, using the exact spacing ratios.
/// n_grid must be at least 256.
double mode_eigenvalue_extrapolated(const StationaryState& state, unsigned k, std::size_t n_grid);

/// Closed-form a_k, b_k with unit amplitude. Grid points must lie in (0, R].
std::pair<RadialProfile, RadialProfile> mode_profiles_closed_form(const StationaryState& state, unsigned k,
                                                                  std::span<const double> grid);

/// Finite-difference stationary-style elliptic solve on a ball of radius R
/// with Gibbs-Thomson boundary data:  Laplace(sigma) = sigma,
/// sigma(R) = sigma_bar (1 - gamma/R);  Laplace(p) = -mu (sigma - sigma_tilde),
/// p(R) = p_bar.
struct BallSolution {
  OffsetGrid grid;
  std::vector<double> sigma;
  std::vector<double> pressure;
  double pressure_slope = 0.0;  // p'(R)
};

BallSolution solve_ball(const ModelParams& params, double radius, std::size_t n_grid);

/// Outward boundary velocity -p'(R) of the radially symmetric problem on a
/// ball of radius R, Richardson-extrapolated from n_grid/2 and n_grid.
double radial_velocity_fd(const ModelParams& params, double radius, std::size_t n_grid);

/// Mean curvature of the axisymmetric surface r = R + rho(theta) with
/// rho = sum_k coeffs[k] P_k(cos theta). Throws std::domain_error when
/// R + rho <= 0 at theta.
double curvature_axisymmetric(double radius, std::span<const double> coeffs, double theta);

/// Directional derivative of the curvature at rho = 0 along P_k, evaluated at
/// theta by Richardson extrapolation of forward differences over
/// eps in {1e-3, 5e-4, 2.5e-4}.
double curvature_directional_derivative(double radius, unsigned k, double theta);

}  // namespace spheroid
