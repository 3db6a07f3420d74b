#pragma once

#include <stdexcept>
#include <string>

namespace prefdesign {

// Error taxonomy mirrors the CLI exit codes: config 2, data format 3,
// numeric family 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside a link function's domain (linear link only).
struct DomainError : NumericError {
  using NumericError::NumericError;
};

// Non-spanning arm sets, degenerate instances, unreachable margins.
struct InfeasibleError : NumericError {
  using NumericError::NumericError;
};

// ROUND could not certify the Loewner guarantee.
struct RoundingError : NumericError {
  using NumericError::NumericError;
};

}  // namespace prefdesign
