#pragma once

#include <stdexcept>
#include <string>

namespace actnet {

// Shape disagreement between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Invalid argument value (negative std, empty batch, lo > hi, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized data (checkpoint length mismatch, bad config field).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested something the object cannot provide (e.g. relative L2 without an
// exact solution, unsupported op on a tape).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by a jet whose value part vanishes.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric failure during optimization; carries the offending step.
struct TrainingError : std::runtime_error {
  int step = -1;
  TrainingError(const std::string& msg, int step_)
      : std::runtime_error(msg + " (step " + std::to_string(step_) + ")"), step(step_) {}
};

}  // namespace actnet
