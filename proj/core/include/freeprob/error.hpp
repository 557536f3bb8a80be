#pragma once

#include <stdexcept>
#include <string>

namespace freeprob {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by an exactly-zero field element or series unit.
class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Numeric evaluation hit a vanishing denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace freeprob
