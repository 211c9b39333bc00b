#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spheroid/model.hpp"
#include "spheroid/stationary.hpp"

namespace spheroid {

/// Constants of the linearized boundary operator at a stationary state.
struct LinearizationCoefficients {
  double c1 = 0.0;  // mu gamma sigma_bar / (2 R^2)
  double c2 = 0.0;  // mu gamma sigma_bar / R^2 - mu sigma_tilde R / 3
  double c3 = 0.0;  // -mu [sigma_bar (1 - gamma/R) - sigma_tilde]
};

LinearizationCoefficients coefficients(const StationaryState& state);

/// Lambda_k = -[c2 - c1 k(k+1)] I_{k+3/2}(R)/I_{k+1/2}(R) + c3.
double lambda_k_direct(const LinearizationCoefficients& coeffs, const StationaryState& state, unsigned k);

struct ModeWeights {
  double h = 0.0;
  double j = 0.0;
};

/// h_k and j_k at radius R (they depend on R only).
ModeWeights h_j_of_k(double radius, unsigned k);
inline ModeWeights h_j_of_k(const StationaryState& state, unsigned k) { return h_j_of_k(state.radius, k); }

/// Lambda_k = (mu sigma_bar / R) [gamma (h_k + j_k) - j_k R]. Valid for every
/// k >= 0; the spectrum module uses it for k >= 2.
double lambda_k_hj(const StationaryState& state, unsigned k);

/// Coefficient of the linearized mean curvature on a degree-k harmonic:
/// -(1/R^2) (1 - k(k+1)/2).
double linearized_curvature(double radius, unsigned k);

/// Per-mode adhesiveness thresholds gamma_k = j_k R / (h_k + j_k).
struct GammaThresholds {
  /// Indexed by k; entries 0 and 1 are NaN (gamma_k is defined for k >= 2).
  std::vector<double> gamma_k;
  double gamma_star = 0.0;
  unsigned attained_at = 2;
  /// Largest k examined (>= requested k_max).
  unsigned scanned_to = 2;
};

/// gamma_k for k in [2, k_max], extended until the tail bound 8R/k has stayed
/// below the running maximum for 50 consecutive k.
/// Throws std::domain_error for k_max < 2.
GammaThresholds gamma_thresholds(double radius, unsigned k_max);

enum class Stability { Stable, Unstable };

const char* to_string(Stability stability);

struct ModeSpectrum {
  StationaryState state;
  unsigned k_max = 2;
  LinearizationCoefficients coeffs;
  std::vector<double> lambdas;     // direct formula, k = 0..k_max; lambdas[1] is the raw residue
  std::vector<double> lambdas_hj;  // h/j formula, k = 0..k_max
  std::vector<double> h;           // k = 0..k_max
  std::vector<double> j;           // k = 0..k_max
  GammaThresholds thresholds;      // gamma_k over the adaptively scanned range
  Stability classification = Stability::Unstable;
};

ModeSpectrum compute_spectrum(const StationaryState& state, unsigned k_max);

/// Stability verdict for one stationary branch.
struct BranchReport {
  StationaryState state;
  Stability classification = Stability::Unstable;
  double lambda0 = 0.0;
  double gamma_star = 0.0;
  unsigned gamma_star_k = 2;
  /// Modes with Lambda_k < 0 (k = 0 or k >= 2), most negative first.
  std::vector<unsigned> unstable_modes;
  /// Smallest positive eigenvalue over k != 1 when the branch is stable.
  std::optional<double> spectral_gap;
  std::optional<unsigned> gap_mode;
  std::string reason;
};

struct StabilityReport {
  ModelParams params;
  double theta = 0.0;
  double theta_star = 0.0;
  std::vector<BranchReport> branches;
  /// Empty when equilibria exist; otherwise "no equilibria (theta >= theta_*)".
  std::string message;
};

StabilityReport classify(const ModelParams& params, unsigned k_max = 64);

BranchReport classify_state(const StationaryState& state, unsigned k_max = 64);

/// The adhesiveness at which the larger branch changes stability for fixed
/// sigma_bar, sigma_tilde: a root of gamma - gamma_*(R_s2(gamma)) found by
/// scanning gamma over (0, gamma_max) where two equilibria exist. Returns the
/// smallest crossing, or nullopt when none is found. Uniqueness is not
/// asserted.
std::optional<double> critical_adhesiveness(const ModelParams& params, unsigned scan_points = 200);

}  // namespace spheroid
