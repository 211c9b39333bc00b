#pragma once

#include <stdexcept>

namespace spheroid {

// Domain violations (non-positive radius, |x| > 1, ...) are reported as
// std::domain_error; invalid model parameters as std::invalid_argument.

/// A numerical procedure failed to converge or could not bracket a solution.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decay-rate fit was requested on data that carries no usable signal.
class InsufficientSignal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spheroid
