#pragma once

#include <stdexcept>
#include <string>

namespace hydrocx {

// Argument outside the mathematical domain of a function (x <= 0 for
// log_gamma, r < 0 for a radial density, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A numerical integral did not reach its tolerance within the panel budget.
// The best available estimate is kept so callers can still report it.
class AccuracyError : public std::runtime_error {
public:
  AccuracyError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

private:
  double estimate_;
  double error_;
};

} // namespace hydrocx
