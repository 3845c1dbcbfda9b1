#pragma once

#include <stdexcept>
#include <string>

namespace rrloc {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (schema violations, invalid instance data).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Failure inside an exact computation (truncation too short, non-integral result, ...).
class ComputationError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NotRational : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class InsufficientTruncation : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NonIntegerResult : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class PresentationMismatch : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// The summed character expansion did not terminate: the fixed-point data cannot come
/// from a compact manifold.
class StabilizationFailure : public InputError {
 public:
  using InputError::InputError;
};

class SymmetryViolation : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace rrloc
