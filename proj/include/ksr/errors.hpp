#pragma once

#include <stdexcept>

namespace ksr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// non-finite or otherwise unusable inputs
struct InvalidInputError : Error { using Error::Error; };
// shape mismatches, indivisible sizes
struct DimensionError : Error { using Error::Error; };
// a MaskSpec that cannot be satisfied (e.g. acceleration > height)
struct InfeasibleSpecError : Error { using Error::Error; };
// lambda target count below the mandatory low-frequency row count
struct InfeasibleRatioError : Error { using Error::Error; };
// lambda mask not a subset of the acquisition mask
struct MaskViolationError : Error { using Error::Error; };
// NaN/Inf produced mid-computation
struct NumericError : Error { using Error::Error; };
// backward tape inconsistent with itself or the requested gradient
struct InvalidTapeError : Error { using Error::Error; };
// unparseable on-disk artifacts (tensors, checkpoints, manifests)
struct FormatError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
// unknown keys or bad values in run configuration
struct ConfigError : Error { using Error::Error; };
// broken internal invariant (e.g. ISTA objective increased)
struct InternalError : Error { using Error::Error; };

} // namespace ksr
