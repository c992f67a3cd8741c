#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kitt {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or document text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Operands live in incompatible rings (different field, variables or order).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace kitt
