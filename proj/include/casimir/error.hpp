#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Malformed or out-of-range input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by its arguments.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A numerical cross-check or quality gate failed (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ODE integration failed or lost its conservation law (CLI exit code 4).
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace casimir
