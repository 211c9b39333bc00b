#include "spheroid/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spheroid/errors.hpp"

namespace spheroid {

namespace {

constexpr double kSeriesCutoff = 20.0;
constexpr int kMaxSeriesTerms = 500;
constexpr double kSeriesRelTol = 1e-18;
constexpr int kMaxFractionTerms = 1'000'000;

void require_positive_argument(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::domain_error(std::string(what) + ": argument must be finite and positive");
  }
}

ScaledValue normalize(double x, long exponent) {
  if (x == 0.0) {
    return {0.0, 0};
  }
  int e = 0;
  const double m = std::frexp(x, &e);
  return {m, exponent + e};
}

// sqrt(2/(pi r)) sinh r, scaled. For large r, e^r is split as 2^n e^f.
ScaledValue bessel_half_order_zero(double r) {
  const double prefactor = std::sqrt(2.0 / (std::numbers::pi * r));
  if (r < 700.0) {
    return normalize(prefactor * std::sinh(r), 0);
  }
  constexpr long double ln2 = 0.693147180559945309417232121458176568L;
  const long n = static_cast<long>(std::floor(static_cast<long double>(r) / ln2));
  const double frac = static_cast<double>(static_cast<long double>(r) - n * ln2);
  const double mant = prefactor * 0.5 * std::exp(frac) * (-std::expm1(-2.0 * r));
  return normalize(mant, n);
}

// Power series of I_nu with nu = m + 1/2. The leading factor (r/2)^nu / Gamma(nu + 1)
// equals sqrt(2r/pi) * prod_{j=1}^{m} r / (2j + 1).
ScaledValue bessel_half_series(unsigned m, double r) {
  ScaledValue lead = normalize(std::sqrt(2.0 * r / std::numbers::pi), 0);
  for (unsigned j = 1; j <= m; ++j) {
    lead = normalize(lead.mantissa * (r / (2.0 * j + 1.0)), lead.exponent);
  }
  const double nu = m + 0.5;
  const double q = 0.25 * r * r;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    if (term < kSeriesRelTol * sum) {
      return normalize(lead.mantissa * sum, lead.exponent);
    }
  }
  throw NumericalFailure("bessel_half: power series did not converge");
}

}  // namespace

double ScaledValue::value() const { return std::ldexp(mantissa, static_cast<int>(exponent)); }

double ScaledValue::log() const {
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

ScaledValue operator*(ScaledValue a, ScaledValue b) {
  return normalize(a.mantissa * b.mantissa, a.exponent + b.exponent);
}

ScaledValue operator/(ScaledValue a, ScaledValue b) {
  return normalize(a.mantissa / b.mantissa, a.exponent - b.exponent);
}

ScaledValue bessel_half_scaled(unsigned m, double r) {
  require_positive_argument(r, "bessel_half");
  if (r < kSeriesCutoff) {
    return bessel_half_series(m, r);
  }
  ScaledValue v = bessel_half_order_zero(r);
  for (unsigned j = 0; j < m; ++j) {
    v = normalize(v.mantissa * bessel_ratio(j, r), v.exponent);
  }
  return v;
}

double bessel_half(unsigned m, double r) { return bessel_half_scaled(m, r).value(); }

double bessel_ratio(unsigned k, double r) {
  require_positive_argument(r, "bessel_ratio");
  // I_{nu+1}/I_nu = 1 / (b_0 + 1 / (b_1 + ...)), b_j = 2 (nu + 1 + j) / r,
  // nu = k + 1/2. Modified Lentz on the denominator.
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double nu = k + 0.5;
  double f = 2.0 * (nu + 1.0) / r;
  double c = f;
  double d = 0.0;
  for (int j = 1; j < kMaxFractionTerms; ++j) {
    const double b = 2.0 * (nu + 1.0 + j) / r;
    d = b + d;
    if (d == 0.0) d = tiny;
    c = b + 1.0 / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < eps) {
      return 1.0 / f;
    }
  }
  throw NumericalFailure("bessel_ratio: continued fraction did not converge");
}

double legendre(unsigned k, double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw std::domain_error("legendre: |x| must not exceed 1");
  }
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (unsigned n = 1; n < k; ++n) {
    const double next = ((2.0 * n + 1.0) * x * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

LegendreValue legendre_with_derivatives(unsigned k, double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw std::domain_error("legendre: |x| must not exceed 1");
  }
  // P'_{n+1} = P'_{n-1} + (2n+1) P_n, and the same relation one derivative up.
  LegendreValue prev{1.0, 0.0, 0.0};
  if (k == 0) return prev;
  LegendreValue cur{x, 1.0, 0.0};
  for (unsigned n = 1; n < k; ++n) {
    LegendreValue next;
    next.p = ((2.0 * n + 1.0) * x * cur.p - n * prev.p) / (n + 1.0);
    next.dp = prev.dp + (2.0 * n + 1.0) * cur.p;
    next.d2p = prev.d2p + (2.0 * n + 1.0) * cur.dp;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace spheroid
