#pragma once

#include <stdexcept>
#include <string>

namespace twopart {

/// Raised when an argument violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Part 1 resolved every coefficient; there is nothing left for Part 2.
class EmptyResidual : public std::runtime_error {
 public:
  EmptyResidual() : std::runtime_error("residual index set is empty") {}
};

/// No grid point reached the requested zero-identification fraction.
class CalibrationFailure : public std::runtime_error {
 public:
  CalibrationFailure(const std::string& what, double best_fraction)
      : std::runtime_error(what), best_fraction_(best_fraction) {}

  double best_fraction() const noexcept { return best_fraction_; }

 private:
  double best_fraction_;
};

inline void require(bool condition, const char* message) {
  if (!condition) throw InvalidParameter(message);
}

}  // namespace twopart
