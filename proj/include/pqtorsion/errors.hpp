#pragma once

#include <stdexcept>
#include <string>

namespace pqtorsion {

/// Argument outside the mathematical domain of an operation (zero valuation,
/// modulus below 2, non-prime where a prime is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result would not fit the 128-bit NaturalNumber bound.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A precondition that makes a condition undefined was violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (p, q) does not form a valid prime pair.
class InvalidPairError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed CSV or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must always hold failed. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pqtorsion
