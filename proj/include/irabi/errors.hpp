#pragma once

#include <stdexcept>
#include <string>

namespace irabi {

/// Invalid parameters or options. Maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested operation needs g < omega/2.
class DivergentRegime : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Requested operation needs a degenerate qubit (omega0 == 0).
class NonDegenerateQubit : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Eigensolver or propagation failure. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irabi
