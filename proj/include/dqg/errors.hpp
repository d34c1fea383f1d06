#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dqg {

// Bad input: malformed files, invalid graphs, inconsistent configuration.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidConfig : public InputError {
 public:
  using InputError::InputError;
};

// A step size that does not divide an edge length into an integer number of intervals.
class NonIntegerN : public InputError {
 public:
  using InputError::InputError;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failures of the numerical machinery itself.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k^2 a^2 = 4 on some edge: the real basis vanishes identically there.
class DegenerateBasis : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularConstraint : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class EigensolverFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class EmptyNullspace : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OracleMismatch : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ResidualExceeded : public NumericalError {
 public:
  ResidualExceeded(std::string which, double residual)
      : NumericalError("residual '" + which + "' = " + std::to_string(residual) + " exceeds tolerance"),
        which_(std::move(which)),
        residual_(residual) {}

  const std::string& which() const noexcept { return which_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string which_;
  double residual_;
};

}  // namespace dqg
