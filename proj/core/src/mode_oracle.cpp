#include "spheroid/mode_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spheroid/errors.hpp"
#include "spheroid/spectrum.hpp"
#include "spheroid/special_functions.hpp"

namespace spheroid {

namespace {

constexpr std::size_t kMinGrid = 64;

// Thomas algorithm; lower[0] and upper[n-1] are ignored.
std::vector<double> solve_tridiagonal(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper,
                                      std::vector<double> rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (diag[i - 1] == 0.0) throw NumericalFailure("tridiagonal solve: zero pivot");
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  if (diag[n - 1] == 0.0) throw NumericalFailure("tridiagonal solve: zero pivot");
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw NumericalFailure("tridiagonal solve: non-finite solution");
  }
  return x;
}

double one_sided_slope(const std::vector<double>& y, double h) {
  const std::size_t n = y.size();
  return (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
}

// Eliminates the h^order term between two grids.
double richardson(double coarse, double fine, double h_coarse, double h_fine, double order = 2.0) {
  const double q = std::pow(h_coarse / h_fine, order);
  return (q * fine - coarse) / (q - 1.0);
}

}  // namespace

OffsetGrid make_offset_grid(double radius, std::size_t n) {
  if (n < 3) throw std::domain_error("offset grid: need at least three nodes");
  if (!(radius > 0.0)) throw std::domain_error("offset grid: radius must be positive");
  OffsetGrid g;
  g.radius = radius;
  g.h = radius / (static_cast<double>(n) - 0.5);
  g.r.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.r[i] = (static_cast<double>(i) + 0.5) * g.h;
  g.r.back() = radius;
  return g;
}

RadialSolution solve_radial(unsigned k, double shift, std::span<const double> source, double boundary_value,
                            const OffsetGrid& grid) {
  const std::size_t n = grid.r.size() - 1;  // unknowns
  if (source.size() != n) throw std::invalid_argument("solve_radial: source size must equal interior node count");
  const double h = grid.h;
  const double kk = static_cast<double>(k) * (k + 1.0);

  // (1/r^2) d/dr (r^2 dy/dr) with face weights (r_i -+ h/2)^2. The inner face
  // of the first cell is the origin, where the flux vanishes.
  std::vector<double> lower(n), diag(n), upper(n), rhs(source.begin(), source.end());
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.r[i];
    const double w_minus = (r - 0.5 * h) * (r - 0.5 * h);
    const double w_plus = (r + 0.5 * h) * (r + 0.5 * h);
    const double scale = 1.0 / (r * r * h * h);
    lower[i] = w_minus * scale;
    upper[i] = w_plus * scale;
    diag[i] = -(w_minus + w_plus) * scale - kk / (r * r) - shift;
  }
  rhs[n - 1] -= upper[n - 1] * boundary_value;

  RadialSolution out;
  out.grid = grid;
  out.y = solve_tridiagonal(std::move(lower), std::move(diag), std::move(upper), std::move(rhs));
  out.y.push_back(boundary_value);
  out.slope_at_boundary = one_sided_slope(out.y, h);
  return out;
}

ModeBvpSolution solve_mode_bvp(const StationaryState& state, unsigned k, std::size_t n_grid) {
  if (n_grid < kMinGrid) throw std::domain_error("solve_mode_bvp: n_grid must be at least 64");
  const auto coeffs = coefficients(state);
  const double amplitude = coeffs.c2 - coeffs.c1 * static_cast<double>(k) * (k + 1.0);
  const OffsetGrid grid = make_offset_grid(state.radius, n_grid);

  const std::vector<double> zero(n_grid - 1, 0.0);
  RadialSolution a = solve_radial(k, 1.0, zero, amplitude, grid);
  std::vector<double> source(n_grid - 1);
  for (std::size_t i = 0; i + 1 < n_grid; ++i) source[i] = -a.y[i];
  RadialSolution b = solve_radial(k, 0.0, source, 0.0, grid);

  ModeBvpSolution out;
  out.k = k;
  out.grid = grid.r;
  out.h = grid.h;
  out.a = std::move(a.y);
  out.b = std::move(b.y);
  out.b_prime_at_boundary = b.slope_at_boundary;
  out.lambda_fd = out.b_prime_at_boundary + coeffs.c3;
  return out;
}

double mode_eigenvalue_extrapolated(const StationaryState& state, unsigned k, std::size_t n_grid) {
  // The error expands as c2 h^2 + c3 h^3 + ...; the h^3 term comes from the
  // one-sided boundary slope.
  const auto coarse = solve_mode_bvp(state, k, n_grid / 4);
  const auto middle = solve_mode_bvp(state, k, n_grid / 2);
  const auto fine = solve_mode_bvp(state, k, n_grid);
  const double first = richardson(coarse.lambda_fd, middle.lambda_fd, coarse.h, middle.h);
  const double second = richardson(middle.lambda_fd, fine.lambda_fd, middle.h, fine.h);
  return richardson(first, second, middle.h, fine.h, 3.0);
}

std::pair<RadialProfile, RadialProfile> mode_profiles_closed_form(const StationaryState& state, unsigned k,
                                                                  std::span<const double> grid) {
  const auto coeffs = coefficients(state);
  const double radius = state.radius;
  const double amplitude = coeffs.c2 - coeffs.c1 * static_cast<double>(k) * (k + 1.0);
  const ScaledValue at_boundary = bessel_half_scaled(k, radius);

  RadialProfile a{{grid.begin(), grid.end()}, {}, ProfileKind::ModeA};
  RadialProfile b{{grid.begin(), grid.end()}, {}, ProfileKind::ModeB};
  for (double r : grid) {
    if (!(r > 0.0) || r > radius * (1.0 + 1e-12)) {
      throw std::domain_error("mode_profiles_closed_form: grid point outside (0, R_s]");
    }
    const double bessel_part = std::sqrt(radius / r) * (bessel_half_scaled(k, r) / at_boundary).value();
    a.values.push_back(amplitude * bessel_part);
    b.values.push_back(-amplitude * (bessel_part - std::pow(r / radius, static_cast<double>(k))));
  }
  return {std::move(a), std::move(b)};
}

BallSolution solve_ball(const ModelParams& params, double radius, std::size_t n_grid) {
  if (n_grid < kMinGrid) throw std::domain_error("solve_ball: n_grid must be at least 64");
  const OffsetGrid grid = make_offset_grid(radius, n_grid);
  const std::vector<double> zero(n_grid - 1, 0.0);
  RadialSolution sigma = solve_radial(0, 1.0, zero, params.sigma_bar * (1.0 - params.gamma / radius), grid);
  std::vector<double> source(n_grid - 1);
  for (std::size_t i = 0; i + 1 < n_grid; ++i) source[i] = -params.mu * (sigma.y[i] - params.sigma_tilde);
  RadialSolution pressure = solve_radial(0, 0.0, source, params.p_bar, grid);

  BallSolution out;
  out.grid = grid;
  out.sigma = std::move(sigma.y);
  out.pressure = std::move(pressure.y);
  out.pressure_slope = pressure.slope_at_boundary;
  return out;
}

double radial_velocity_fd(const ModelParams& params, double radius, std::size_t n_grid) {
  const auto coarse = solve_ball(params, radius, n_grid / 2);
  const auto fine = solve_ball(params, radius, n_grid);
  return -richardson(coarse.pressure_slope, fine.pressure_slope, coarse.grid.h, fine.grid.h);
}

double curvature_axisymmetric(double radius, std::span<const double> coeffs, double theta) {
  const double x = std::cos(theta);
  const double s = std::sin(theta);
  double rho = 0.0;
  double dp = 0.0;
  double d2p = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    const LegendreValue v = legendre_with_derivatives(static_cast<unsigned>(k), std::clamp(x, -1.0, 1.0));
    rho += coeffs[k] * v.p;
    dp += coeffs[k] * v.dp;
    d2p += coeffs[k] * v.d2p;
  }
  const double r = radius + rho;
  if (!(r > 0.0)) throw std::domain_error("curvature_axisymmetric: R + rho must be positive");

  // theta-derivatives of rho(cos theta).
  const double rho_t = -s * dp;
  const double rho_tt = -x * dp + s * s * d2p;
  // cot(theta) rho_theta = -cos(theta) P'(cos theta); at the poles this
  // equals rho_theta_theta, so the Laplacian tends to 2 rho_theta_theta.
  const bool pole = s == 0.0;
  const double laplacian = pole ? 2.0 * rho_tt : rho_tt - x * dp;
  const double grad2 = rho_t * rho_t;
  const double grad_grad2_dot_grad = 2.0 * rho_t * rho_tt * rho_t;

  const double root = std::sqrt(r * r + grad2);
  return 0.5 * ((2.0 * r - laplacian) / (r * root) +
                (2.0 * r * grad2 + grad_grad2_dot_grad) / (2.0 * r * root * root * root));
}

double curvature_directional_derivative(double radius, unsigned k, double theta) {
  std::vector<double> coeffs(k + 1, 0.0);
  const double base = curvature_axisymmetric(radius, coeffs, theta);
  auto quotient = [&](double eps) {
    coeffs[k] = eps;
    return (curvature_axisymmetric(radius, coeffs, theta) - base) / eps;
  };
  const double d1 = quotient(1e-3);
  const double d2 = quotient(5e-4);
  const double d3 = quotient(2.5e-4);
  // Eliminate the O(eps) then the O(eps^2) terms.
  const double e1 = 2.0 * d2 - d1;
  const double e2 = 2.0 * d3 - d2;
  return (4.0 * e2 - e1) / 3.0;
}

}  // namespace spheroid
