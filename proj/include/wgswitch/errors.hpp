#pragma once

#include <stdexcept>
#include <string>

namespace wgswitch {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input, configuration, or violated precondition.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Failure of a numerical routine on otherwise valid input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// numkernel
class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class DegenerateParameterError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class NonConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// propagate
class StepUnderflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// adiabatic / splitter preconditions
class BoundaryError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class DegenerateError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class DimensionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace wgswitch
