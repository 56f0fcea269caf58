#pragma once

#include <stdexcept>
#include <string>

namespace coxeter {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold for the given input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed Coxeter-matrix text or word text.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured cap (closure size, ball size) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed, e.g. two independent computations
/// of the same quantity disagree.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxeter
