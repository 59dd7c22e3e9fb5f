#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on the data was violated (matrix outside Gamma, relation
/// not a partial order, order not admissible, size bound exceeded, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace clc
