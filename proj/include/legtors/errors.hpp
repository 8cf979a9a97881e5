#pragma once

#include <stdexcept>
#include <string>

namespace legtors {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x in {0,1}, ...).
struct DomainError : Error {
  using Error::Error;
};

// mod4_class on a rational with even denominator.
struct NotTwoIntegralError : Error {
  using Error::Error;
};

// Exact division requested but the remainder was nonzero.
struct InexactDivisionError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

// Mixed-ring polynomial arithmetic.
struct RingMismatchError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, long line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_number(line) {}
  long line_number;
};

struct NumericPrecisionError : Error {
  using Error::Error;
};

}  // namespace legtors
