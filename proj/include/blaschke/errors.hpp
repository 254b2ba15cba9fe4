#pragma once

#include <stdexcept>
#include <string>

namespace blaschke {

/// Violated precondition or malformed input. Maps to CLI exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A function claimed to be analytic carries negative-frequency content above
/// tolerance. Usually means the sample count is too small. Maps to exit code 3.
class AnalyticityError : public std::runtime_error {
 public:
  AnalyticityError(const std::string& what, double negative_level, double scale, int step = -1)
      : std::runtime_error(what), negative_level_(negative_level), scale_(scale), step_(step) {}

  double negative_level() const { return negative_level_; }
  double scale() const { return scale_; }
  /// Expansion step at which degradation was detected, -1 if not applicable.
  int step() const { return step_; }

 private:
  double negative_level_;
  double scale_;
  int step_;
};

}  // namespace blaschke
