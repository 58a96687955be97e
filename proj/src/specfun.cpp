#include "hydrocx/specfun.hpp"

#include "hydrocx/error.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <string>

namespace hydrocx::specfun {

namespace {

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

} // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return boost::math::lgamma(x);
}

double digamma(double x) {
  require_positive(x, "digamma");
  return boost::math::digamma(x);
}

double log_gamma_ratio(double a, double b) { return log_gamma(a) - log_gamma(b); }

double log_pochhammer(double a, double k) { return log_gamma(a + k) - log_gamma(a); }

} // namespace hydrocx::specfun
