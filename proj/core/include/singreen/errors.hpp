// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_ERRORS_HPP
#define SINGREEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace singreen {

/// Raised when an evaluation scheme cannot reach its accuracy target.
/// Callers get an explicit signal instead of a silently degraded value.
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a construction hits a genuinely singular configuration
/// (vanishing matching Wronskian, resonance of a fixed point, ...).
class SingularConfigError : public std::runtime_error {
 public:
  explicit SingularConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an ODE integration fails; carries the radius it failed at.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double radius)
      : std::runtime_error(what + " (r = " + std::to_string(radius) + ")"), radius_(radius) {}
  double radius() const { return radius_; }

 private:
  double radius_;
};

}  // namespace singreen

#endif
