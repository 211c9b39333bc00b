#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spheroid/mode_oracle.hpp"
#include "spheroid/special_functions.hpp"
#include "spheroid/spectrum.hpp"
#include "support/configs.hpp"

namespace spheroid {
namespace {

using testing::state_at_radius;

TEST(OffsetGrid, LastNodeSitsOnBoundary) {
  const OffsetGrid g = make_offset_grid(2.0, 100);
  EXPECT_EQ(g.r.size(), 100u);
  EXPECT_NEAR(g.r.back(), 2.0, 1e-15);
  EXPECT_NEAR(g.r.front(), 0.5 * g.h, 1e-15);
  EXPECT_THROW(make_offset_grid(2.0, 2), std::domain_error);
  EXPECT_THROW(make_offset_grid(0.0, 100), std::domain_error);
}

TEST(SolveRadial, ReproducesPolynomialSolution) {
  // y'' + 2y'/r - 6y/r^2 = 0 has regular solution r^2 (k = 2).
  const OffsetGrid g = make_offset_grid(1.5, 512);
  const std::vector<double> source(g.r.size() - 1, 0.0);
  const RadialSolution sol = solve_radial(2, 0.0, source, 1.5 * 1.5, g);
  for (std::size_t i = 0; i < g.r.size(); i += 50) {
    EXPECT_NEAR(sol.y[i], g.r[i] * g.r[i], 1e-5);
  }
  EXPECT_NEAR(sol.slope_at_boundary, 3.0, 1e-4);
  EXPECT_THROW(solve_radial(2, 0.0, std::vector<double>(3, 0.0), 1.0, g), std::invalid_argument);
}

TEST(ModeBvp, SecondOrderConvergenceToClosedForm) {
  const auto s = state_at_radius(3.0, 0.4);
  const auto c = coefficients(s);
  for (unsigned k : {0u, 2u, 7u}) {
    const double exact = lambda_k_direct(c, s, k);
    const double e1 = std::abs(solve_mode_bvp(s, k, 256).lambda_fd - exact);
    const double e2 = std::abs(solve_mode_bvp(s, k, 512).lambda_fd - exact);
    const double e3 = std::abs(solve_mode_bvp(s, k, 1024).lambda_fd - exact);
    EXPECT_NEAR(e1 / e2, 4.0, 0.5) << "k=" << k;
    EXPECT_NEAR(e2 / e3, 4.0, 0.5) << "k=" << k;
  }
}

TEST(ModeBvp, ExtrapolatedEigenvalueMatchesClosedForm) {
  for (const auto& s : solve_stationary(ModelParams{})) {
    const auto c = coefficients(s);
    for (unsigned k : {0u, 1u, 2u, 5u, 12u, 20u}) {
      const double exact = lambda_k_direct(c, s, k);
      const double fd = mode_eigenvalue_extrapolated(s, k, 4096);
      EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact))) << "R=" << s.radius << " k=" << k;
    }
  }
}

TEST(ModeBvp, ProfilesMatchClosedForm) {
  const auto s = state_at_radius(2.0, 0.2);
  const ModeBvpSolution fd = solve_mode_bvp(s, 3, 1024);
  const auto [a, b] = mode_profiles_closed_form(s, 3, fd.grid);
  double worst_a = 0.0, worst_b = 0.0;
  for (std::size_t i = 0; i < fd.grid.size(); ++i) {
    worst_a = std::max(worst_a, std::abs(fd.a[i] - a.values[i]));
    worst_b = std::max(worst_b, std::abs(fd.b[i] - b.values[i]));
  }
  EXPECT_LT(worst_a, 1e-5);
  EXPECT_LT(worst_b, 1e-5);
  EXPECT_THROW(solve_mode_bvp(s, 3, 32), std::domain_error);
}

TEST(Ball, BoundaryVelocityMatchesRadialRhs) {
  const ModelParams p;
  for (double radius : {0.1, 0.5, 2.0, 8.0, 15.0}) {
    const double expected =
        p.mu * radius * (p.sigma_bar * f_of_R(p.gamma, radius) - p.sigma_tilde / 3.0);
    const double scale = p.mu * radius * std::max(p.sigma_bar * std::abs(f_of_R(p.gamma, radius)), p.sigma_tilde / 3.0);
    EXPECT_NEAR(radial_velocity_fd(p, radius, 2048), expected, 1e-6 * scale) << "R=" << radius;
  }
}

TEST(Ball, StationaryRadiusHasZeroFlux) {
  const auto s = solve_stationary(ModelParams{})[1];
  const BallSolution ball = solve_ball(s.params, s.radius, 2048);
  EXPECT_NEAR(ball.sigma.back(), 1.0 - 0.1 / s.radius, 1e-14);
  EXPECT_NEAR(ball.pressure.back(), 0.0, 1e-14);
  EXPECT_NEAR(ball.pressure_slope, 0.0, 1e-4);
}

TEST(Curvature, SphereHasCurvatureOneOverR) {
  const std::vector<double> none;
  for (double theta : {0.0, 0.7, std::numbers::pi}) {
    EXPECT_NEAR(curvature_axisymmetric(2.5, none, theta), 1.0 / 2.5, 1e-14);
  }
}

TEST(Curvature, RadialShiftIsExact) {
  const std::vector<double> shift{0.5};
  EXPECT_NEAR(curvature_axisymmetric(2.0, shift, 1.1), 1.0 / 2.5, 1e-14);
}

TEST(Curvature, DirectionalDerivativeMatchesLinearization) {
  const double radius = 1.7;
  for (unsigned k : {0u, 1u, 2u, 3u, 5u, 8u}) {
    const double coef = linearized_curvature(radius, k);
    const double scale = std::max(std::abs(coef), 1.0 / (radius * radius));
    for (double theta : {0.0, 0.4, 1.3, 2.9}) {
      const double expected = coef * legendre(k, std::cos(theta));
      EXPECT_NEAR(curvature_directional_derivative(radius, k, theta), expected, 1e-4 * scale)
          << "k=" << k << " theta=" << theta;
    }
  }
}

TEST(Curvature, RejectsCollapsedSurface) {
  const std::vector<double> collapse{-3.0};
  EXPECT_THROW(curvature_axisymmetric(2.0, collapse, 0.5), std::domain_error);
}

}  // namespace
}  // namespace spheroid
