#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobcheck {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: composite modulus, duplicate variables, improper ideals...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands built over different rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
};

/// Exponent arithmetic left the 32-bit range.
class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent overflow") {}
};

/// A configured pair/size budget was exhausted. Never a silent truncation.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Text input failed to parse. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column),
        message_(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Internal invariant broken (e.g. an exact division left a remainder).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frobcheck
