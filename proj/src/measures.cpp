#include "hydrocx/measures.hpp"

#include "hydrocx/error.hpp"
#include "hydrocx/oracle.hpp"
#include "hydrocx/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace hydrocx::measures {

namespace {

using specfun::digamma;
using specfun::log_gamma;
using std::numbers::pi;

double xlogx2(double p) {
  const double p2 = p * p;
  return p2 > 0.0 ? p2 * std::log(p2) : 0.0;
}

Estimate laguerre_entropic(const orthopoly::LaguerreSpec& spec, int i, const QuadratureSpec& q) {
  const auto roots = orthopoly::roots_of(spec);
  auto f = [&](double x) {
    const double v = xlogx2(orthopoly::eval_laguerre_on(spec, x));
    return v == 0.0 ? 0.0 : -v * orthopoly::laguerre_weight(spec.alpha + i, x);
  };
  const auto r = integrate_adaptive(f, 0.0, HUGE_VAL, q, roots, 2.0);
  return {r.value, r.error};
}

Estimate gegenbauer_entropic(const orthopoly::GegenbauerSpec& spec, int i,
                             const QuadratureSpec& q) {
  const auto roots = orthopoly::roots_of(spec);
  auto f = [&](double x) {
    const double v = xlogx2(orthopoly::eval_gegenbauer_on(spec, x));
    return v == 0.0 ? 0.0 : -v * orthopoly::gegenbauer_weight(spec.lambda, x) * (i ? x : 1.0);
  };
  const auto r = integrate_adaptive(f, -1.0, 1.0, q, roots);
  return {r.value, r.error};
}

// ∫_{-1}^{1} C̃^4 (1-x^2)^{2 mu_{j+1}} (1-x^2)^{alpha_j - 1/2} dx
Estimate quartic_angular(const AngularFactorSpec& a, const QuadratureSpec& q) {
  const auto spec = a.poly();
  const auto roots = orthopoly::roots_of(spec);
  const double expo = 2.0 * a.mu_j1 + a.alpha_j - 0.5;
  auto f = [&](double x) {
    const double p = orthopoly::eval_gegenbauer_on(spec, x);
    const double s = (1.0 - x) * (1.0 + x);
    return p * p * p * p * std::pow(s, expo);
  };
  const auto r = integrate_adaptive(f, -1.0, 1.0, q, roots);
  return {r.value, r.error};
}

} // namespace

Estimate entropic_integral(const EntropicIntegralSpec& spec, const QuadratureSpec& q) {
  if (spec.moment != 0 && spec.moment != 1) {
    throw DomainError("entropic_integral: moment must be 0 or 1");
  }
  if (const auto* lag = std::get_if<orthopoly::LaguerreSpec>(&spec.poly)) {
    orthopoly::check(*lag);
    return laguerre_entropic(*lag, spec.moment, q);
  }
  const auto& geg = std::get<orthopoly::GegenbauerSpec>(spec.poly);
  orthopoly::check(geg);
  return gegenbauer_entropic(geg, spec.moment, q);
}

double coefficient_a(const HyperState& s) {
  const auto p = derived_params(s, NuclearCharge{1.0});
  const double eta = p.eta, L = p.L, D = s.dim;
  const double l = s.l();
  return -2.0 * l * ((2.0 * eta - 2.0 * L - 1.0) / (2.0 * eta) + digamma(eta + L + 1.0)) +
         (3.0 * eta * eta - L * (L + 1.0)) / eta -
         ((D - 1.0) * std::log(2.0) - (D + 1.0) * std::log(eta));
}

double coefficient_b(const HyperState& s) {
  double b = std::log(2.0 * pi);
  for (const auto& a : angular_factors(s)) {
    if (a.mu_j1 == 0) {
      continue;
    }
    const double al = a.alpha_j;
    b -= 2.0 * a.mu_j1 *
         (digamma(2.0 * al + a.mu_j + a.mu_j1) - digamma(al + a.mu_j) - std::log(2.0) -
          1.0 / (2.0 * (al + a.mu_j)));
  }
  return b;
}

double coefficient_f(const HyperState& s) {
  const auto p = derived_params(s, NuclearCharge{1.0});
  const double eta = p.eta, L = p.L, D = s.dim;
  // 2 eta (2L+1) / (4 eta^2 - 1). Numerator and denominator share the
  // factor 2 eta - 1 when l = n - 1, which vanishes for the 2-D ground
  // state; use the reduced ratio there.
  const double ratio = (s.l() == s.n - 1) ? 2.0 * eta / (2.0 * eta + 1.0)
                                          : 2.0 * eta * (2.0 * L + 1.0) / (4.0 * eta * eta - 1.0);
  return -(D * std::log(eta) - (2.0 * L + 4.0) * std::log(2.0)) -
         (2.0 * L + 4.0) * (digamma(eta + L + 1.0) - digamma(eta)) + (L + 2.0) / eta -
         (D + 1.0) * (1.0 - ratio);
}

Estimate ShannonParts::t_value() const {
  Estimate t = radial_integral + angular_integrals;
  t.value += radial_coefficient + angular_coefficient;
  return t;
}

Estimate ShannonParts::total() const {
  Estimate t = t_value();
  t.value += z_term;
  return t;
}

ShannonParts shannon_parts(const HyperState& s, NuclearCharge Z, Space space,
                           const QuadratureSpec& q) {
  const auto p = derived_params(s, Z);
  ShannonParts parts{};
  parts.angular_coefficient = coefficient_b(s);
  parts.angular_integrals = {0.0, 0.0};
  for (const auto& a : angular_factors(s)) {
    parts.angular_integrals = parts.angular_integrals + entropic_integral({a.poly(), 0}, q);
  }
  const double dlnz = s.dim * std::log(Z.value());
  if (space == Space::Position) {
    parts.radial_coefficient = coefficient_a(s);
    parts.radial_integral = (1.0 / (2.0 * p.eta)) * entropic_integral({radial_laguerre(s), 1}, q);
    parts.z_term = -dlnz;
  } else {
    parts.radial_coefficient = coefficient_f(s);
    parts.radial_integral = entropic_integral({momentum_gegenbauer(s), 0}, q);
    parts.z_term = dlnz;
  }
  return parts;
}

Estimate shannon_entropy(const HyperState& s, NuclearCharge Z, Space space,
                         const QuadratureSpec& q) {
  return shannon_parts(s, Z, space, q).total();
}

Estimate hyperangular_quartic(const HyperState& s, const QuadratureSpec& q) {
  Estimate k2{1.0 / (2.0 * pi), 0.0};
  for (const auto& a : angular_factors(s)) {
    k2 = k2 * quartic_angular(a, q);
  }
  return k2;
}

Estimate disequilibrium(const HyperState& s, NuclearCharge Z, Space space,
                        const QuadratureSpec& q) {
  const auto p = derived_params(s, Z);
  const double D = s.dim;
  const int l = s.l();
  const Estimate k2 = hyperangular_quartic(s, q);
  if (space == Space::Position) {
    // ∫ R^2 r^{D-1} dr = (2Z)^D / (4 eta^{D+2}) ∫ x^{4l+D-1} e^{-2x} L̃^4 dx
    const auto lag = radial_laguerre(s);
    const auto roots = orthopoly::roots_of(lag);
    const double power = 4.0 * l + D - 1.0;
    auto f = [&](double x) {
      const double v = orthopoly::eval_laguerre_on(lag, x);
      const double v2 = v * v;
      return x == 0.0 ? (power == 0.0 ? v2 * v2 : 0.0)
                      : v2 * v2 * std::exp(power * std::log(x) - 2.0 * x);
    };
    const auto r = integrate_adaptive(f, 0.0, HUGE_VAL, q, roots, 1.0);
    const double pref = std::exp((D - 2.0) * std::log(2.0) + D * std::log(Z.value()) -
                                 (D + 2.0) * std::log(p.eta));
    return pref * Estimate{r.value, r.error} * k2;
  }
  // Momentum, in y = (1-u^2)/(1+u^2):
  // ∫ gamma_rad^2 p^{D-1} dp = (eta/Z)^D ∫ (1-y)^l (1+y)^{2L+5-l} (1-y^2)^{L+1/2} C̃^4 dy
  const auto geg = momentum_gegenbauer(s);
  const auto roots = orthopoly::roots_of(geg);
  const double L = p.L;
  auto f = [&](double y) {
    const double v = orthopoly::eval_gegenbauer_on(geg, y);
    const double lm = std::log1p(-y);
    const double lp = std::log1p(y);
    return v * v * v * v *
           std::exp((l + L + 0.5) * lm + (2.0 * L + 5.0 - l + L + 0.5) * lp);
  };
  const auto r = integrate_adaptive(f, -1.0, 1.0, q, roots);
  const double pref = std::exp(D * std::log(p.eta / Z.value()));
  return pref * Estimate{r.value, r.error} * k2;
}

double fisher_information(const HyperState& s, NuclearCharge Z, Space space) {
  const auto p = derived_params(s, Z);
  const double eta = p.eta, L = p.L, m = s.m_abs();
  const double z2 = Z.value() * Z.value();
  if (space == Space::Position) {
    return 4.0 * z2 / (eta * eta * eta) * (eta - m);
  }
  return 2.0 * eta * eta / z2 *
         (5.0 * eta * eta - 3.0 * L * (L + 1.0) - m * (8.0 * eta - 6.0 * L - 3.0) + 1.0);
}

double position_variance(const HyperState& s, NuclearCharge Z) {
  const auto p = derived_params(s, Z);
  const double eta = p.eta, L = p.L;
  return (eta * eta * (eta * eta + 2.0) - L * L * (L + 1.0) * (L + 1.0)) /
         (4.0 * Z.value() * Z.value());
}

PrintedMomentumMoments printed_momentum_moments(const HyperState& s, NuclearCharge Z) {
  const auto p = derived_params(s, Z);
  const double z = Z.value();
  const double mean = 2.0 * z / (pi * p.eta);
  const double second = z * z / (p.eta * p.eta);
  return {mean, second, second * (1.0 - 4.0 / (pi * pi))};
}

Variance variance(const HyperState& s, NuclearCharge Z, Space space) {
  if (space == Space::Position) {
    return {position_variance(s, Z), false};
  }
  return {printed_momentum_moments(s, Z).variance, true};
}

MeasureSet closed_form_measures(const HyperState& s, NuclearCharge Z, Space space,
                                const QuadratureSpec& q) {
  MeasureSet m;
  m.space = space;
  m.provenance = Provenance::ClosedForm;
  m.normalization = {1.0, 0.0};
  m.disequilibrium = disequilibrium(s, Z, space, q);
  m.shannon = shannon_entropy(s, Z, space, q);
  m.fisher = {fisher_information(s, Z, space), 0.0};
  const auto v = variance(s, Z, space);
  m.variance = v.use_oracle ? oracle::variance(s, Z, space, q) : Estimate{v.value, 0.0};
  return m;
}

// --- circular states -------------------------------------------------------

namespace {

void check_circular(int n, int dim) {
  if (n < 1 || dim < 2) {
    throw DomainError("circular state needs n >= 1 and D >= 2");
  }
}

} // namespace

double circular_disequilibrium(int n, int dim, NuclearCharge Z, Space space) {
  check_circular(n, dim);
  const double D = dim;
  const double lz = std::log(Z.value());
  const double l2 = std::log(2.0), lpi = std::log(pi);
  const double lw = std::log(2.0 * n + D - 3.0);
  const double h = n + 0.5 * (D - 1.0);
  if (space == Space::Position) {
    return std::exp(D * lz + log_gamma(n - 0.5) + log_gamma(2.0 * n + 0.5 * (D - 3.0)) -
                    (2.0 * n - 2.0) * l2 - 0.5 * D * lpi - D * lw - log_gamma(n) -
                    2.0 * log_gamma(h));
  }
  return std::exp((4.0 * n + D - 4.0) * l2 + D * lw + 2.0 * log_gamma(h) +
                  log_gamma(2.0 * n - 1.0) + log_gamma(2.0 * n + 1.5 * D) - D * lz -
                  0.5 * (D + 2.0) * lpi - 2.0 * log_gamma(n) - log_gamma(4.0 * n + 2.0 * D - 2.0));
}

double circular_momentum_coefficient(int n, int dim) {
  check_circular(n, dim);
  const double D = dim;
  return (2.0 * n + D - 1.0) / (2.0 * n + D - 3.0) - (D + 1.0) / (2.0 * n + D - 2.0) -
         (n - 1.0) * digamma(n) - 0.5 * (D + 1.0) * digamma(n + 0.5 * (D - 2.0)) +
         (n + 0.5 * (D - 1.0)) * digamma(n + 0.5 * (D - 3.0));
}

double circular_shannon(int n, int dim, NuclearCharge Z, Space space) {
  check_circular(n, dim);
  const double D = dim;
  const double lz = std::log(Z.value());
  const double lw = std::log(2.0 * n + D - 3.0);
  const double h = n + 0.5 * (D - 1.0);
  if (space == Space::Position) {
    return 2.0 * n + D - 2.0 - (n - 1.0) * (digamma(n) + digamma(h)) - D * std::log(2.0) +
           D * lw + 0.5 * (D - 1.0) * std::log(pi) + log_gamma(n) + log_gamma(h) - D * lz;
  }
  return circular_momentum_coefficient(n, dim) + (D + 1.0) * std::log(2.0) + D * lz + 0.5 * (D + 1.0) * std::log(pi) + log_gamma(n) -
         D * lw - log_gamma(h);
}

// --- printed functionals ---------------------------------------------------

Estimate disequilibrium_printed_k1(const HyperState& s, NuclearCharge Z, const QuadratureSpec& q) {
  const auto p = derived_params(s, Z);
  const double D = s.dim;
  // {omega_{2L+1} L̃^2}^2 x^{-D-5} = x^{4L+2-D-5} e^{-2x} L̃^4 = x^{4l+D-9} ...
  const double power = 4.0 * s.l() + D - 9.0;
  if (power <= -1.0) {
    return {std::nan(""), 0.0};
  }
  const auto lag = radial_laguerre(s);
  const auto roots = orthopoly::roots_of(lag);
  auto f = [&](double x) {
    const double v = orthopoly::eval_laguerre_on(lag, x);
    return v * v * v * v * std::exp(power * std::log(x) - 2.0 * x);
  };
  const auto r = integrate_adaptive(f, 0.0, HUGE_VAL, q, roots, 1.0);
  const double pref = std::exp((D - 2.0) * std::log(2.0) + D * std::log(Z.value()) -
                               (D + 2.0) * std::log(p.eta));
  return pref * Estimate{r.value, r.error} * hyperangular_quartic(s, q);
}

Estimate disequilibrium_printed_k3(const HyperState& s, NuclearCharge Z, const QuadratureSpec& q) {
  const auto p = derived_params(s, Z);
  const double D = s.dim;
  const int l = s.l();
  const auto geg = momentum_gegenbauer(s);
  std::vector<double> breaks;
  for (double y : orthopoly::roots_of(geg)) {
    breaks.push_back(std::sqrt((1.0 - y) / (1.0 + y)));
  }
  std::sort(breaks.begin(), breaks.end());
  const double power = 4.0 * l + D - 1.0;
  auto f = [&](double u) {
    if (u == 0.0) {
      return 0.0;
    }
    const double u2 = u * u;
    const double v = orthopoly::eval_gegenbauer_on(geg, std::clamp((1.0 - u2) / (1.0 + u2), -1.0, 1.0));
    return v * v * v * v * std::exp(power * std::log(u) - (4.0 * p.L + 8.0) * std::log1p(u2));
  };
  const auto r = integrate_adaptive(f, 0.0, HUGE_VAL, q, breaks, 1.0);
  const double pref =
      std::exp((4.0 * p.L + 8.0) * std::log(2.0) + D * std::log(p.eta / Z.value()));
  return pref * Estimate{r.value, r.error} * hyperangular_quartic(s, q);
}

} // namespace hydrocx::measures
