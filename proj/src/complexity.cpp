#include "hydrocx/complexity.hpp"

#include "hydrocx/error.hpp"
#include "hydrocx/measures.hpp"
#include "hydrocx/oracle.hpp"
#include "hydrocx/specfun.hpp"

#include <cmath>
#include <numbers>

namespace hydrocx::complexity {

namespace {

using specfun::digamma;
using specfun::log_gamma;
using std::numbers::e;
using std::numbers::pi;

Estimate exp_of(Estimate x) {
  const double v = std::exp(x.value);
  return {v, v * x.error};
}

} // namespace

Estimate lmc(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q) {
  return measures::disequilibrium(s, Z, space, q) *
         exp_of(measures::shannon_entropy(s, Z, space, q));
}

Estimate fisher_shannon(const HyperState& s, NuclearCharge Z, Space space,
                        const QuadratureSpec& q) {
  const Estimate t = measures::shannon_parts(s, Z, space, q).t_value();
  const double f1 = measures::fisher_information(s, NuclearCharge{1.0}, space);
  return (f1 / (2.0 * pi * e)) * exp_of((2.0 / s.dim) * t);
}

Estimate cramer_rao(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q) {
  const double f = measures::fisher_information(s, Z, space);
  if (space == Space::Position) {
    return {f * measures::position_variance(s, Z), 0.0};
  }
  return f * oracle::variance(s, Z, space, q);
}

double cramer_rao_printed(const HyperState& s, Space space) {
  const auto p = derived_params(s, NuclearCharge{1.0});
  const double eta = p.eta, L = p.L, m = s.m_abs();
  if (space == Space::Position) {
    return (s.n - m) * (eta * eta * (eta * eta + 2.0) - L * L * (L + 1.0)) / (eta * eta * eta);
  }
  return 2.0 * (1.0 - 4.0 / (pi * pi)) *
         (5.0 * eta * eta - 3.0 * L * (L + 1.0) - m * (8.0 * eta - 6.0 * L - 3.0) - 1.0);
}

double cramer_rao_printed_variance_pairing(const HyperState& s) {
  const NuclearCharge one{1.0};
  return measures::fisher_information(s, one, Space::Momentum) *
         measures::printed_momentum_moments(s, one).variance;
}

BoundReport bound_report(const ComplexityTriple& t, int dim) {
  auto check = [](double v, double b) { return BoundCheck{v, b, v >= b, v - b}; };
  const double d = dim;
  return {check(t.lmc.value, 1.0), check(t.fisher_shannon.value, d),
          check(t.cramer_rao.value, d * d)};
}

ComplexityTriple complexities(const HyperState& s, NuclearCharge Z, Space space,
                              const QuadratureSpec& q) {
  ComplexityTriple t;
  t.space = space;
  t.lmc = lmc(s, Z, space, q);
  t.fisher_shannon = fisher_shannon(s, Z, space, q);
  t.cramer_rao = cramer_rao(s, Z, space, q);
  t.bounds = bound_report(t, s.dim);
  return t;
}

double circular_lmc(int n, int dim, Space space) {
  if (n < 1 || dim < 2) {
    throw DomainError("circular_lmc: need n >= 1 and D >= 2");
  }
  const double D = dim;
  const double h = n + 0.5 * (D - 1.0);
  if (space == Space::Position) {
    return std::exp(log_gamma(n - 0.5) + log_gamma(2.0 * n + 0.5 * (D - 3.0)) -
                    (2.0 * n + D - 2.0) * std::log(2.0) - 0.5 * std::log(pi) - log_gamma(h) +
                    2.0 * n + D - 2.0 - (n - 1.0) * (digamma(n) + digamma(h)));
  }
  return std::exp((4.0 * n + 2.0 * D - 3.0) * std::log(2.0) + log_gamma(h) +
                  log_gamma(2.0 * n - 1.0) + log_gamma(2.0 * n + 1.5 * D) - 0.5 * std::log(pi) -
                  log_gamma(n) - log_gamma(4.0 * n + 2.0 * D - 2.0) +
                  measures::circular_momentum_coefficient(n, dim));
}

double ground_state_lmc(int dim, Space space) {
  if (dim < 2) {
    throw DomainError("ground_state_lmc: need D >= 2");
  }
  const double D = dim;
  if (space == Space::Position) {
    return std::exp(D * (1.0 - std::log(2.0)));
  }
  return std::exp(D * std::log(2.0) + log_gamma(0.5 * (D + 1.0)) + log_gamma(2.0 + 1.5 * D) -
                  0.5 * std::log(pi) - log_gamma(2.0 * D + 2.0) +
                  (D + 1.0) * (digamma(D + 1.0) - digamma(0.5 * (D + 2.0))));
}

} // namespace hydrocx::complexity
