#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spheroid/model.hpp"

namespace spheroid::cli {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t grid = 4096;
  /// Multiplies every tolerance; values below 1 tighten the suite.
  double tolerance_scale = 1.0;
};

/// Runs every oracle cross-check for the given parameters: Bessel
/// identities, stationary roots, dual spectrum formulas, finite-difference
/// mode problems, curvature linearization, the radial velocity law and the
/// radial decay rate. Requires at least one stationary state.
std::vector<CheckResult> run_verify_suite(const ModelParams& params, const VerifyOptions& options);

}  // namespace spheroid::cli
