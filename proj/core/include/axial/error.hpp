#pragma once

#include <stdexcept>
#include <string>

namespace axial {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A required piece of structure (Frobenius form, unit) is absent.
class MissingStructure : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data; carries the offending line when known.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A configured resource cap was hit; never a silent truncation.
class SolverCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace axial
