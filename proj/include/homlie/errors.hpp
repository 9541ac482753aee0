#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(q)") {}
};

class ForbiddenSpecialization : public Error {
 public:
  explicit ForbiddenSpecialization(const std::string& q0)
      : Error("q cannot be specialized to " + q0 + " (0 and +-1 are excluded)") {}
};

class PoleAtPoint : public Error {
 public:
  explicit PoleAtPoint(const std::string& q0)
      : Error("denominator vanishes at q = " + q0) {}
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class UnknownBuiltin : public Error {
 public:
  explicit UnknownBuiltin(const std::string& name)
      : Error("unknown built-in algebra '" + name + "'") {}
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ClassModeMismatch : public Error {
 public:
  using Error::Error;
};

class DependentKnowns : public Error {
 public:
  using Error::Error;
};

class NonQuadraticConstraint : public Error {
 public:
  using Error::Error;
};

}  // namespace homlie
