#pragma once

// Modified Bessel functions of the first kind at half-integer order,
// I_{m+1/2}(r), their consecutive-order ratios, and Legendre polynomials.
//
// All functions are pure and reentrant.

namespace spheroid {

/// A positive real stored as mantissa * 2^exponent so that values far outside
/// the double range (I_{m+1/2}(r) for r > ~700, or large m at small r) keep
/// full relative precision.
struct ScaledValue {
  double mantissa = 0.0;  // in [0.5, 1) for normalized nonzero values
  long exponent = 0;

  /// Unscaled value; overflows to +inf or underflows to 0 when not
  /// representable as a double.
  [[nodiscard]] double value() const;
  /// Natural logarithm of the represented value.
  [[nodiscard]] double log() const;
};

ScaledValue operator*(ScaledValue a, ScaledValue b);
ScaledValue operator/(ScaledValue a, ScaledValue b);

/// I_{m+1/2}(r) in scaled form. Power series for r < 20, otherwise the closed
/// form of I_{1/2} times the product of consecutive-order ratios.
/// Throws std::domain_error for r <= 0.
ScaledValue bessel_half_scaled(unsigned m, double r);

/// I_{m+1/2}(r). Relative error below 1e-12 for r <= 50, m <= 200.
/// Throws std::domain_error for r <= 0.
double bessel_half(unsigned m, double r);

/// I_{k+3/2}(r) / I_{k+1/2}(r), evaluated by a Lentz continued fraction.
/// Accurate for k up to 1e4 and r up to 1e3; never overflows.
/// Throws std::domain_error for r <= 0.
double bessel_ratio(unsigned k, double r);

/// Legendre polynomial P_k(x) by the three-term recurrence.
/// Throws std::domain_error for |x| > 1.
double legendre(unsigned k, double x);

struct LegendreValue {
  double p = 0.0;    // P_k(x)
  double dp = 0.0;   // P_k'(x)
  double d2p = 0.0;  // P_k''(x)
};

/// P_k and its first two derivatives; finite at x = +-1.
LegendreValue legendre_with_derivatives(unsigned k, double x);

}  // namespace spheroid
