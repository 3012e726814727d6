#pragma once

#include <stdexcept>
#include <string>

namespace fpinc {

// Base for every error raised by the library. Anything derived from Error is
// attributable to the caller's input; InvariantViolation is the exception.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A point or line listed twice where sets are required.
class DuplicateElement : public Error {
 public:
  using Error::Error;
};

// Two equal points (or lines) where distinct ones are required.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Malformed instance/config/report text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fpinc
