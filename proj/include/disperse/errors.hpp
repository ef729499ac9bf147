#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disperse {

// Error taxonomy mirrored by the CLI exit codes:
//   1 certification failure, 2 input/config error, 3 degenerate data, 4 divergence.

// Malformed or non-finite input data (CSV parse errors, NaN/Inf entries, bad shapes).
struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad configuration documents or flags (unknown keys, out-of-range values).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Batches on which a pairwise loss is undefined (B < 2, zero-norm row under cosine).
struct DegenerateBatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The finite-difference oracle hit a non-finite probe point.
struct OracleFailureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerically certified property failed (would falsify a proven statement).
struct ContractViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training loss went non-finite or above the guard threshold.
struct DivergenceError : std::runtime_error {
  DivergenceError(const std::string& msg, std::size_t epoch_)
      : std::runtime_error(msg), epoch(epoch_) {}
  std::size_t epoch;
};

}  // namespace disperse
