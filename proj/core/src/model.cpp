#include "spheroid/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spheroid {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and positive, got " +
                                std::to_string(value));
  }
}

}  // namespace

void ModelParams::validate() const {
  require_positive(sigma_bar, "sigma_bar");
  require_positive(sigma_tilde, "sigma_tilde");
  require_positive(mu, "mu");
  require_positive(gamma, "gamma");
  if (!std::isfinite(p_bar)) {
    throw std::invalid_argument("p_bar must be finite");
  }
}

}  // namespace spheroid
