#pragma once

#include <stdexcept>
#include <string>

namespace isolab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexing or parsing failure, with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A term or binding is ill-sorted.
class SortError : public Error {
 public:
  using Error::Error;
};

/// A finite structure violates the invariants of its type. The message
/// carries a concrete witness.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace isolab
