#pragma once

#include <stdexcept>
#include <string>

namespace stirling {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (ln of x <= 0, z <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested working precision is below the supported floor.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A size limit was exceeded (Bernoulli table cap, factorial argument, ...).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The argument is outside the range for which an inequality is stated.
// This reports a restriction on the claim, not a numerical failure.
class ValidityError : public Error {
 public:
  using Error::Error;
};

// A strict inequality could not be decided because its margin is within the
// arithmetic error envelope.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

// An iterative method did not reach its target within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace stirling
