#pragma once

namespace spheroid {

/// Physical constants of the tumor-spheroid model with Gibbs-Thomson
/// boundary condition.
///
///   sigma_bar   external nutrient concentration
///   sigma_tilde apoptosis threshold concentration
///   mu          proliferation rate
///   gamma       cell-to-cell adhesiveness
///   p_bar       external pressure (any sign)
struct ModelParams {
  double sigma_bar = 1.0;
  double sigma_tilde = 0.3;
  double mu = 1.0;
  double gamma = 0.1;
  double p_bar = 0.0;

  /// Nutrient ratio sigma_tilde / sigma_bar.
  [[nodiscard]] double theta() const { return sigma_tilde / sigma_bar; }

  /// Throws std::invalid_argument unless sigma_bar, sigma_tilde, mu and
  /// gamma are finite and positive and p_bar is finite.
  void validate() const;

  bool operator==(const ModelParams&) const = default;
};

}  // namespace spheroid
