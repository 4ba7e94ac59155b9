#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fanova {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: shape mismatches, bad subsets, out-of-range options.
struct InvalidInputError : Error {
  using Error::Error;
};

/// Problems with external inputs: CSV files, model files, version tags.
struct DataError : Error {
  using Error::Error;
};

/// Numerical failures (factorizations, degenerate kernels, ...).
struct NumericalError : Error {
  using Error::Error;
};

/// The empirical normalizer of a constrained kernel fell below the floor.
struct DegenerateKernelError : NumericalError {
  using NumericalError::NumericalError;
};

/// Gram matrix could not be factorized even after jitter escalation.
struct IllConditionedError : NumericalError {
  using NumericalError::NumericalError;
};

/// Every candidate evaluated by the hyperparameter search failed to fit.
struct OptimizationFailedError : NumericalError {
  using NumericalError::NumericalError;
};

/// An explanation covariance could not be factorized for sampling.
struct ExplanationDegenerateError : NumericalError {
  using NumericalError::NumericalError;
};

/// A brute-force oracle was asked for more features than its hard ceiling.
struct OracleTooLargeError : InvalidInputError {
  using InvalidInputError::InvalidInputError;
};

/// Adaptive quadrature ran out of subdivisions; carries the best estimate.
struct QuadratureError : NumericalError {
  QuadratureError(const std::string& what, double best)
      : NumericalError(what), best_estimate(best) {}
  double best_estimate;
};

/// FNV-1a over a byte range. Used to fingerprint datasets in model files.
inline std::uint64_t fnv1a(const void* bytes, std::size_t len,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace fanova
