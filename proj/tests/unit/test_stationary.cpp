#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spheroid/stationary.hpp"
#include "support/goldens.hpp"
#include "support/oracles.hpp"

namespace spheroid {
namespace {

using oracle::rel_err;

ModelParams params_with(double sigma_tilde, double gamma) {
  ModelParams p;
  p.sigma_tilde = sigma_tilde;
  p.gamma = gamma;
  return p;
}

TEST(ShapeFunction, MatchesGoldensAndCothForm) {
  EXPECT_LT(rel_err(f_of_R(0.1, 2.0), golden::kF_gamma01_R2), 1e-14);
  EXPECT_LT(rel_err(f_prime_of_R(0.1, 2.0), golden::kFPrime_gamma01_R2), 1e-13);
  for (double gamma : {0.01, 0.3, 2.0}) {
    for (double r : {0.05, 0.4, 1.0, 3.3, 10.0, 40.0, 300.0}) {
      const double expected = static_cast<double>(oracle::f_coth(gamma, r));
      EXPECT_NEAR(f_of_R(gamma, r), expected, 1e-14 * std::max(1.0, std::abs(expected)) + 1e-17);
    }
  }
}

TEST(ShapeFunction, DerivativeMatchesFiniteDifferenceAndModeWeights) {
  for (double gamma : {0.05, 0.5, 1.5}) {
    for (double r : {0.2, 0.9, 2.0, 7.0, 25.0}) {
      const double fd = static_cast<double>(oracle::f_prime_fd(gamma, r));
      EXPECT_NEAR(f_prime_of_R(gamma, r), fd, 1e-8 * std::max(1.0, std::abs(fd)));
      EXPECT_NEAR(f_prime_from_mode_weights(gamma, r), f_prime_of_R(gamma, r), 1e-12);
    }
  }
}

TEST(ShapeFunction, SmallRadiusLimitIsStable) {
  // (R coth R - 1)/R^2 -> 1/3 as R -> 0.
  EXPECT_NEAR(f_of_R(1e-12, 1e-8) / (1.0 - 1e-4), 1.0 / 3.0, 1e-12);
  EXPECT_THROW(f_of_R(0.1, 0.0), std::domain_error);
}

TEST(ThetaStar, MatchesGoldens) {
  for (const auto& g : golden::kThetaStar) {
    const ThetaStar t = theta_star(g.gamma);
    EXPECT_LT(rel_err(t.theta_star, g.theta_star), 1e-13) << "gamma=" << g.gamma;
    EXPECT_LT(rel_err(t.argmax_radius, g.argmax), 1e-8) << "gamma=" << g.gamma;
  }
}

TEST(ThetaStar, DecreasesWithAdhesiveness) {
  double prev = 1.0;
  for (double gamma : {1e-4, 1e-3, 0.01, 0.1, 0.5, 1.0, 3.0, 10.0}) {
    const double t = theta_star(gamma).theta_star;
    EXPECT_LT(t, prev);
    EXPECT_GT(t, 0.0);
    prev = t;
  }
  EXPECT_THROW(theta_star(0.0), std::domain_error);
}

TEST(SolveStationary, DefaultParametersGiveTwoGoldenRoots) {
  const auto states = solve_stationary(ModelParams{});
  ASSERT_EQ(states.size(), 2u);
  EXPECT_EQ(states[0].branch, Branch::Smaller);
  EXPECT_EQ(states[1].branch, Branch::Larger);
  EXPECT_LT(rel_err(states[0].radius, golden::kSmaller.radius), 1e-12);
  EXPECT_LT(rel_err(states[1].radius, golden::kLarger.radius), 1e-12);
  EXPECT_GT(states[0].f_prime, 0.0);
  EXPECT_LT(states[1].f_prime, 0.0);
}

TEST(SolveStationary, AgreesWithDenseScanOracle) {
  for (double gamma : {0.02, 0.1, 0.7}) {
    for (double fraction : {0.1, 0.5, 0.9, 0.99}) {
      const double theta = fraction * theta_star(gamma).theta_star;
      const ModelParams p = params_with(theta, gamma);
      const auto roots = oracle::roots_by_scan(
          [&](long double r) { return oracle::f_coth(gamma, r) - theta / 3.0L; }, gamma * 1.000001, 1e4);
      const auto states = solve_stationary(p);
      ASSERT_EQ(roots.size(), 2u);
      ASSERT_EQ(states.size(), 2u);
      EXPECT_LT(rel_err(states[0].radius, roots[0]), 1e-11);
      EXPECT_LT(rel_err(states[1].radius, roots[1]), 1e-11);
    }
  }
}

TEST(SolveStationary, NoRootsAboveThetaStar) {
  for (double gamma : {0.01, 0.1, 1.0}) {
    const double ts = theta_star(gamma).theta_star;
    EXPECT_TRUE(solve_stationary(params_with(ts * 1.001, gamma)).empty());
    EXPECT_TRUE(solve_stationary(params_with(ts + 1e-8, gamma)).empty());
  }
}

TEST(SolveStationary, DegenerateAtThetaStar) {
  const ThetaStar t = theta_star(0.1);
  const auto states = solve_stationary(params_with(t.theta_star, 0.1));
  ASSERT_EQ(states.size(), 1u);
  EXPECT_TRUE(states[0].degenerate);
  EXPECT_NEAR(states[0].radius, t.argmax_radius, 1e-9);
}

TEST(SolveStationary, SmallThetaPushesLargerRootFarOut) {
  const auto states = solve_stationary(params_with(1e-4, 0.1));
  ASSERT_EQ(states.size(), 2u);
  EXPECT_GT(states[1].radius, 1e4);
  EXPECT_LT(std::abs(f_of_R(0.1, states[1].radius) - 1e-4 / 3.0), 1e-12);
}

TEST(SolveStationary, InvariantUnderScalingOfBothConcentrations) {
  ModelParams a = params_with(0.3, 0.2);
  ModelParams b = a;
  b.sigma_bar = 4.0;
  b.sigma_tilde = 1.2;
  b.mu = 9.0;
  b.p_bar = 3.0;
  const auto sa = solve_stationary(a);
  const auto sb = solve_stationary(b);
  ASSERT_EQ(sa.size(), 2u);
  ASSERT_EQ(sb.size(), 2u);
  EXPECT_NEAR(sa[0].radius, sb[0].radius, 1e-12 * sa[0].radius);
  EXPECT_NEAR(sa[1].radius, sb[1].radius, 1e-12 * sa[1].radius);
}

TEST(SolveStationary, RejectsInvalidParameters) {
  EXPECT_THROW(solve_stationary(params_with(0.3, 0.0)), std::invalid_argument);
  EXPECT_THROW(solve_stationary(params_with(-0.3, 0.1)), std::invalid_argument);
  ModelParams p;
  p.sigma_bar = std::nan("");
  EXPECT_THROW(solve_stationary(p), std::invalid_argument);
  p = ModelParams{};
  p.mu = 0.0;
  EXPECT_THROW(solve_stationary(p), std::invalid_argument);
}

TEST(SigmaTildeForRadius, BackSolveReproducesRadius) {
  for (double radius : {0.8, 3.0, 12.0}) {
    const double gamma = 0.05;
    const ModelParams p = params_with(sigma_tilde_for_radius(1.0, gamma, radius), gamma);
    bool found = false;
    for (const auto& s : solve_stationary(p)) found |= std::abs(s.radius - radius) < 1e-10 * radius;
    EXPECT_TRUE(found) << "radius=" << radius;
  }
}

TEST(Profiles, SigmaSatisfiesBoundaryAndHelmholtz) {
  const auto state = solve_stationary(ModelParams{})[1];
  const auto grid = uniform_grid(state.radius, 2001);
  const RadialProfile s = sigma_profile(state, grid);
  const double boundary = state.params.sigma_bar * (1.0 - state.params.gamma / state.radius);
  EXPECT_NEAR(s.values.back(), boundary, 1e-13);
  // sigma'' + 2 sigma'/r = sigma at interior points
  const double h = grid[1] - grid[0];
  for (std::size_t i : {200u, 900u, 1700u}) {
    const double r = grid[i];
    const double d2 = (s.values[i + 1] - 2 * s.values[i] + s.values[i - 1]) / (h * h);
    const double d1 = (s.values[i + 1] - s.values[i - 1]) / (2 * h);
    EXPECT_NEAR(d2 + 2 * d1 / r, s.values[i], 1e-5 * std::max(1e-3, s.values[i]));
  }
}

TEST(Profiles, PressureSatisfiesBoundaryAndPoisson) {
  ModelParams params;
  params.p_bar = 2.0;
  const auto state = solve_stationary(params)[1];
  const auto grid = uniform_grid(state.radius, 2001);
  const RadialProfile sig = sigma_profile(state, grid);
  const RadialProfile p = pressure_profile(state, grid);
  EXPECT_NEAR(p.values.back(), 2.0, 1e-12);
  const double h = grid[1] - grid[0];
  for (std::size_t i : {300u, 1000u, 1900u}) {
    const double r = grid[i];
    const double d2 = (p.values[i + 1] - 2 * p.values[i] + p.values[i - 1]) / (h * h);
    const double d1 = (p.values[i + 1] - p.values[i - 1]) / (2 * h);
    const double rhs = -params.mu * (sig.values[i] - params.sigma_tilde);
    EXPECT_NEAR(d2 + 2 * d1 / r, rhs, 1e-5);
  }
  // Zero boundary flux: p'(R_s) = 0 at a stationary state.
  const std::size_t n = grid.size() - 1;
  const double slope = (3 * p.values[n] - 4 * p.values[n - 1] + p.values[n - 2]) / (2 * h);
  EXPECT_NEAR(slope, 0.0, 1e-5);
}

TEST(Profiles, RejectPointsOutsideBall) {
  const auto state = solve_stationary(ModelParams{})[1];
  const std::vector<double> bad{0.0, state.radius * 1.01};
  EXPECT_THROW(sigma_profile(state, bad), std::domain_error);
  EXPECT_THROW(pressure_profile(state, bad), std::domain_error);
  EXPECT_THROW(uniform_grid(1.0, 1), std::domain_error);
}

TEST(Profiles, SinhRatioNoOverflow) {
  EXPECT_NEAR(sinh_ratio(0.0, 1.0), 1.0 / std::sinh(1.0), 1e-15);
  EXPECT_NEAR(sinh_ratio(800.0, 800.0), 1.0, 1e-14);
  EXPECT_NEAR(sinh_ratio(799.0, 800.0), (800.0 / 799.0) * std::exp(-1.0), 1e-14);
}

}  // namespace
}  // namespace spheroid
