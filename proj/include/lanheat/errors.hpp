#pragma once

#include <stdexcept>
#include <string>

namespace lanheat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed structured-text input. Carries the 1-based line number (0 if unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A value violates a physical or structural constraint. `field()` names the offending field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure inside a solver (non-finite values, singular systems).
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace lanheat
