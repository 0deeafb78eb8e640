#pragma once

#include <stdexcept>
#include <string>

namespace sgi {

/// Input that violates a documented precondition (negative width, t <= 0, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Physically valid input for which the model itself is not usable,
/// e.g. an imaginary cutoff frequency or a non-positive a'(t).
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure that could not meet its requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// Malformed scenario configuration; carries the offending line (0 when unknown).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace sgi
