#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index (disc, class, position) outside the range of the object it refers to.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed ribbon-code or partition text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised by bound computations for codes (or certificates) whose surface is not connected.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a search or enumeration bound.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace ribbon
