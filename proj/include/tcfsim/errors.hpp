#pragma once

#include <stdexcept>
#include <string>

namespace tcfsim {

/// Invalid configuration input (file syntax, unknown keys, out-of-range values).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally inconsistent model (dangling node references, zero-length
/// elements, missing per-element state).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure of a numerical procedure (factorization breakdown, residual
/// beyond tolerance, non-finite intermediate values).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Compressive prestress at or beyond the critical load.
class BucklingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// No eigenmode matched the resonator-mode criterion.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tcfsim
