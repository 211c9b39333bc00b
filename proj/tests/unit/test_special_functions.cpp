#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spheroid/special_functions.hpp"
#include "support/goldens.hpp"
#include "support/oracles.hpp"

namespace spheroid {
namespace {

using oracle::rel_err;

TEST(BesselHalf, MatchesHighPrecisionGoldens) {
  EXPECT_LT(rel_err(bessel_half(5, 2.5), golden::kI_11_2_at_2_5), 1e-13);
  EXPECT_LT(rel_err(bessel_half(0, 1.0), golden::kI_1_2_at_1), 1e-14);
  EXPECT_LT(rel_err(bessel_half(1, 1.0), golden::kI_3_2_at_1), 1e-14);
}

TEST(BesselHalf, OrderZeroIsSinhClosedForm) {
  for (double r : {0.01, 0.3, 1.0, 5.0, 19.9, 20.1, 60.0}) {
    const double expected = std::sqrt(2.0 / (std::numbers::pi * r)) * std::sinh(r);
    EXPECT_LT(rel_err(bessel_half(0, r), expected), 1e-13) << "r=" << r;
  }
}

TEST(BesselHalf, AgreesWithSeriesOracle) {
  for (unsigned m : {0u, 1u, 2u, 5u, 10u, 20u, 40u}) {
    for (double r : {0.05, 0.5, 1.0, 2.5, 7.0, 15.0, 19.99, 20.01, 30.0, 45.0}) {
      const double expected = static_cast<double>(oracle::bessel_series(m, r));
      EXPECT_LT(rel_err(bessel_half(m, r), expected), 5e-12) << "m=" << m << " r=" << r;
    }
  }
}

TEST(BesselHalf, ThreeTermRecurrence) {
  // I_{nu-1} - I_{nu+1} = (2 nu / r) I_nu
  for (unsigned m = 1; m < 30; ++m) {
    for (double r : {0.2, 1.0, 3.0, 12.0, 25.0, 80.0}) {
      const double nu = m + 0.5;
      const ScaledValue lo = bessel_half_scaled(m - 1, r);
      const ScaledValue mid = bessel_half_scaled(m, r);
      const ScaledValue hi = bessel_half_scaled(m + 1, r);
      const double lhs = (lo / mid).value() - (hi / mid).value();
      EXPECT_LT(rel_err(lhs, 2.0 * nu / r), 1e-11) << "m=" << m << " r=" << r;
    }
  }
}

TEST(BesselHalf, ScaledValueSurvivesOverflowRange) {
  for (double r : {700.0, 1000.0, 5000.0}) {
    const ScaledValue v = bessel_half_scaled(0, r);
    const double expected_log = r - 0.5 * std::log(2.0 * std::numbers::pi * r);
    EXPECT_NEAR(v.log(), expected_log, 1e-10 * expected_log) << "r=" << r;
  }
  EXPECT_TRUE(std::isinf(bessel_half(0, 1000.0)) || bessel_half(0, 1000.0) > 1e300);
}

TEST(BesselHalf, RejectsNonPositiveArgument) {
  EXPECT_THROW(bessel_half(0, 0.0), std::domain_error);
  EXPECT_THROW(bessel_half(0, -1.0), std::domain_error);
  EXPECT_THROW(bessel_half(0, std::nan("")), std::domain_error);
}

TEST(BesselRatio, MatchesGoldenAndSmallArgumentLimit) {
  EXPECT_LT(rel_err(bessel_ratio(40, 3.0), golden::kRatio_k40_r3), 1e-13);
  for (unsigned k : {0u, 3u, 10u}) {
    EXPECT_LT(rel_err(bessel_ratio(k, 1e-6), 1e-6 / (2.0 * k + 3.0)), 1e-9);
  }
}

TEST(BesselRatio, AgreesWithQuotientOfSeries) {
  for (unsigned k = 0; k <= 60; k += 3) {
    for (double r : {0.01, 0.7, 2.0, 9.0, 30.0}) {
      const double expected = static_cast<double>(oracle::ratio_series(k, r));
      EXPECT_LT(rel_err(bessel_ratio(k, r), expected), 1e-12) << "k=" << k << " r=" << r;
    }
  }
}

TEST(BesselRatio, RiccatiIdentityForOrderZero) {
  // rho_0' = 1 - 2 rho_0 / r - rho_0^2
  for (double r : {0.3, 1.0, 4.0, 12.0}) {
    const double h = 1e-5 * r;
    const double d = (bessel_ratio(0, r + h) - bessel_ratio(0, r - h)) / (2 * h);
    const double rho = bessel_ratio(0, r);
    EXPECT_NEAR(d, 1.0 - 2.0 * rho / r - rho * rho, 1e-8);
  }
}

TEST(BesselRatio, BoundedAndMonotoneInOrder) {
  for (double r : {0.1, 2.0, 50.0, 800.0}) {
    double prev = 1.0;
    for (unsigned k = 0; k < 200; k += 7) {
      const double rho = bessel_ratio(k, r);
      EXPECT_GT(rho, 0.0);
      EXPECT_LT(rho, prev);
      prev = rho;
    }
  }
}

TEST(Legendre, LowOrdersClosedForm) {
  for (double x : {-1.0, -0.4, 0.0, 0.25, 0.9, 1.0}) {
    EXPECT_DOUBLE_EQ(legendre(0, x), 1.0);
    EXPECT_DOUBLE_EQ(legendre(1, x), x);
    EXPECT_NEAR(legendre(2, x), 0.5 * (3 * x * x - 1), 1e-15);
    EXPECT_NEAR(legendre(3, x), 0.5 * (5 * x * x * x - 3 * x), 1e-15);
  }
}

TEST(Legendre, EndpointsAndDerivatives) {
  for (unsigned k = 0; k < 25; ++k) {
    EXPECT_NEAR(legendre(k, 1.0), 1.0, 1e-14);
    EXPECT_NEAR(legendre(k, -1.0), (k % 2 ? -1.0 : 1.0), 1e-14);
    const LegendreValue v = legendre_with_derivatives(k, 1.0);
    EXPECT_NEAR(v.dp, 0.5 * k * (k + 1.0), 1e-10 * (1 + k * k));
  }
}

TEST(Legendre, SatisfiesDifferentialEquation) {
  // (1 - x^2) P'' - 2 x P' + k(k+1) P = 0
  for (unsigned k = 0; k < 20; ++k) {
    for (double x : {-0.8, -0.1, 0.3, 0.75}) {
      const LegendreValue v = legendre_with_derivatives(k, x);
      const double residual = (1 - x * x) * v.d2p - 2 * x * v.dp + k * (k + 1.0) * v.p;
      EXPECT_NEAR(residual, 0.0, 1e-10 * (1 + k * k * k));
    }
  }
}

TEST(Legendre, RejectsOutOfRange) {
  EXPECT_THROW(legendre(2, 1.0001), std::domain_error);
  EXPECT_THROW(legendre_with_derivatives(2, -2.0), std::domain_error);
}

}  // namespace
}  // namespace spheroid
