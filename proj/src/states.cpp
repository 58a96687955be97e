#include "hydrocx/states.hpp"

#include "hydrocx/error.hpp"
#include "hydrocx/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace hydrocx {

using orthopoly::ValueAndDerivative;
using std::numbers::pi;

NuclearCharge::NuclearCharge(double z) : z_(z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("nuclear charge must be positive and finite");
  }
}

std::string mu_string(const HyperState& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.mu.size(); ++i) {
    os << (i ? "," : "") << s.mu[i];
  }
  return os.str();
}

std::string to_string(const HyperState& s) {
  std::ostringstream os;
  os << "D=" << s.dim << " n=" << s.n << " mu=(" << mu_string(s) << ")";
  return os.str();
}

std::optional<StateViolation> find_violation(int dim, int n, std::span<const int> mu) {
  if (dim < 2) {
    return StateViolation{Violation::DimensionTooSmall, -1,
                          "dimension D >= 2 violated (D=" + std::to_string(dim) + ")"};
  }
  if (n < 1) {
    return StateViolation{Violation::PrincipalNotPositive, -1,
                          "n >= 1 violated (n=" + std::to_string(n) + ")"};
  }
  if (static_cast<int>(mu.size()) != dim - 1) {
    return StateViolation{Violation::WrongMuLength, -1,
                          "mu must have D-1 = " + std::to_string(dim - 1) + " entries, got " +
                              std::to_string(mu.size())};
  }
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0) {
      return StateViolation{Violation::NegativeMu, static_cast<int>(i + 1),
                            "mu_" + std::to_string(i + 1) + " >= 0 violated"};
    }
  }
  if (mu[0] > n - 1) {
    return StateViolation{Violation::LExceedsN, 1,
                          "l ≤ n−1 violated (l=" + std::to_string(mu[0]) +
                              ", n=" + std::to_string(n) + ")"};
  }
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (mu[i] > mu[i - 1]) {
      return StateViolation{Violation::ChainIncreases, static_cast<int>(i + 1),
                            "chain mu_" + std::to_string(i) + " >= mu_" + std::to_string(i + 1) +
                                " violated"};
    }
  }
  return std::nullopt;
}

HyperState validate_state(int dim, int n, std::vector<int> mu) {
  if (auto v = find_violation(dim, n, mu)) {
    throw StateError(std::move(*v));
  }
  return HyperState{dim, n, std::move(mu)};
}

HyperState circular_state(int n, int dim) {
  return validate_state(dim, n, std::vector<int>(dim > 1 ? dim - 1 : 0, n - 1));
}

std::vector<HyperState> enumerate_states(int dim, int n_max) {
  std::vector<HyperState> out;
  std::vector<int> mu(dim - 1, 0);
  // Non-increasing chains with entries in [0, n-1].
  std::function<void(int, int, int)> rec = [&](int n, int pos, int cap) {
    if (pos == dim - 1) {
      out.push_back(HyperState{dim, n, mu});
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      mu[pos] = v;
      rec(n, pos + 1, v);
    }
  };
  for (int n = 1; n <= n_max; ++n) {
    rec(n, 0, n - 1);
  }
  return out;
}

DerivedParams derived_params(const HyperState& s, NuclearCharge Z) {
  const double shift = 0.5 * (s.dim - 3);
  const double eta = s.n + shift;
  const double z = Z.value();
  return {eta, s.l() + shift, eta / (2.0 * z), -z * z / (eta * eta)};
}

// --- angular ---------------------------------------------------------------

AngularFactorSpec make_angular_factor(int dim, int j, int mu_j, int mu_j1) {
  if (j < 1 || j > dim - 2 || mu_j1 < 0 || mu_j < mu_j1) {
    throw DomainError("angular factor: need 1 <= j <= D-2 and mu_j >= mu_{j+1} >= 0");
  }
  return {dim, j, 0.5 * (dim - j - 1), mu_j, mu_j1};
}

std::vector<AngularFactorSpec> angular_factors(const HyperState& s) {
  std::vector<AngularFactorSpec> out;
  for (int j = 1; j <= s.dim - 2; ++j) {
    out.push_back(make_angular_factor(s.dim, j, s.mu[j - 1], s.mu[j]));
  }
  return out;
}

namespace {

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= pi)) {
    throw DomainError("polar angle must lie in [0, pi], got " + std::to_string(theta));
  }
}

void check_angles(int dim, std::span<const double> angles) {
  if (static_cast<int>(angles.size()) != dim - 1) {
    throw DomainError("expected D-1 = " + std::to_string(dim - 1) + " angles");
  }
}

double int_pow(double x, int k) {
  return k == 0 ? 1.0 : std::pow(x, k);
}

} // namespace

ValueAndDerivative angular_amplitude(const AngularFactorSpec& spec, double theta) {
  check_theta(theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const auto poly = orthopoly::eval_gegenbauer_on_d(spec.poly(), std::clamp(c, -1.0, 1.0));
  const int m = spec.mu_j1;
  const double sm = int_pow(s, m);
  double d = -poly.derivative * sm * s;
  if (m > 0) {
    d += m * poly.value * int_pow(s, m - 1) * c;
  }
  return {poly.value * sm, d};
}

double angular_density_factor(const AngularFactorSpec& spec, double theta) {
  const double a = angular_amplitude(spec, theta).value;
  return a * a;
}

double hyperspherical_density(const HyperState& s, std::span<const double> angles) {
  check_angles(s.dim, angles);
  double y2 = 1.0 / (2.0 * pi);
  for (const auto& f : angular_factors(s)) {
    y2 *= angular_density_factor(f, angles[f.j - 1]);
  }
  return y2;
}

// --- radial ----------------------------------------------------------------

orthopoly::LaguerreSpec radial_laguerre(const HyperState& s) {
  return {s.n - s.l() - 1, 2.0 * s.l() + s.dim - 2.0};
}

orthopoly::GegenbauerSpec momentum_gegenbauer(const HyperState& s) {
  return {s.n - s.l() - 1, s.l() + 0.5 * (s.dim - 1)};
}

ValueAndDerivative position_radial_amplitude(const HyperState& s, NuclearCharge Z, double r) {
  if (!(r >= 0.0)) {
    throw DomainError("radius must be non-negative");
  }
  const auto prm = derived_params(s, Z);
  const int l = s.l();
  const double x = r / prm.lambda;
  // radial density = lambda^{-D}/(2 eta) x^{2l} e^{-x} L̃^2, since
  // omega_{2L+1}(x) / x^{D-2} = x^{2l} e^{-x}.
  const double log_c = -s.dim * std::log(prm.lambda) - std::log(2.0 * prm.eta);
  const auto lag = orthopoly::eval_laguerre_on_d(radial_laguerre(s), x);
  const double envelope = std::exp(0.5 * log_c - 0.5 * x);
  const double xl = int_pow(x, l);
  double dx = xl * (lag.derivative - 0.5 * lag.value);
  if (l > 0) {
    dx += l * int_pow(x, l - 1) * lag.value;
  }
  return {envelope * xl * lag.value, envelope * dx / prm.lambda};
}

double position_radial_density(const HyperState& s, NuclearCharge Z, double r) {
  const double g = position_radial_amplitude(s, Z, r).value;
  return g * g;
}

ValueAndDerivative momentum_radial_amplitude(const HyperState& s, NuclearCharge Z, double p) {
  if (!(p >= 0.0)) {
    throw DomainError("momentum must be non-negative");
  }
  const auto prm = derived_params(s, Z);
  const int l = s.l();
  const double scale = prm.eta / Z.value();
  const double u = scale * p;
  const double u2 = u * u;
  const double y = (1.0 - u2) / (1.0 + u2);
  // radial density = (eta/Z)^D 2^{2L+4} u^{2l} (1+u^2)^{-(2L+4)} C̃(y)^2
  const double log_c = s.dim * std::log(scale) + (2.0 * prm.L + 4.0) * std::log(2.0);
  const auto geg = orthopoly::eval_gegenbauer_on_d(momentum_gegenbauer(s), std::clamp(y, -1.0, 1.0));
  const double power = prm.L + 2.0;
  const double envelope = std::exp(0.5 * log_c - power * std::log1p(u2));
  const double ul = int_pow(u, l);
  const double dy_du = -4.0 * u / ((1.0 + u2) * (1.0 + u2));
  double du = ul * (geg.derivative * dy_du - 2.0 * power * u / (1.0 + u2) * geg.value);
  if (l > 0) {
    du += l * int_pow(u, l - 1) * geg.value;
  }
  return {envelope * ul * geg.value, envelope * du * scale};
}

double momentum_radial_density(const HyperState& s, NuclearCharge Z, double p) {
  const double g = momentum_radial_amplitude(s, Z, p).value;
  return g * g;
}

double position_density(const HyperState& s, NuclearCharge Z, double r,
                        std::span<const double> angles) {
  return position_radial_density(s, Z, r) * hyperspherical_density(s, angles);
}

double momentum_density(const HyperState& s, NuclearCharge Z, double p,
                        std::span<const double> angles) {
  return momentum_radial_density(s, Z, p) * hyperspherical_density(s, angles);
}

// --- circular closed forms -------------------------------------------------

namespace {

double log_sine_product(int n, int dim, std::span<const double> angles) {
  check_angles(dim, angles);
  double acc = 0.0;
  for (int j = 0; j < dim - 2; ++j) {
    check_theta(angles[j]);
    if (n > 1) {
      acc += (2.0 * n - 2.0) * std::log(std::sin(angles[j]));
    }
  }
  return acc;
}

void check_circular(int n, int dim) {
  if (n < 1 || dim < 2) {
    throw DomainError("circular state needs n >= 1 and D >= 2");
  }
}

} // namespace

double circular_position_density(int n, int dim, NuclearCharge Z, double r,
                                 std::span<const double> angles) {
  check_circular(n, dim);
  if (!(r >= 0.0)) {
    throw DomainError("radius must be non-negative");
  }
  const double D = dim;
  const double z = Z.value();
  const double eta = n + 0.5 * (D - 3.0);
  const double x = r / (eta / (2.0 * z));
  double log_rho = (D + 2.0 - 2.0 * n) * std::log(2.0) + D * std::log(z) -
                   0.5 * (D - 1.0) * std::log(pi) - D * std::log(2.0 * n + D - 3.0) -
                   specfun::log_gamma(n) - specfun::log_gamma(n + 0.5 * (D - 1.0)) - x;
  if (n > 1) {
    if (x == 0.0) {
      return 0.0;
    }
    log_rho += (2.0 * n - 2.0) * std::log(x);
  }
  const double ls = log_sine_product(n, dim, angles);
  return std::isinf(ls) ? 0.0 : std::exp(log_rho + ls);
}

double circular_momentum_density(int n, int dim, NuclearCharge Z, double p,
                                 std::span<const double> angles) {
  check_circular(n, dim);
  if (!(p >= 0.0)) {
    throw DomainError("momentum must be non-negative");
  }
  const double D = dim;
  const double z = Z.value();
  const double eta = n + 0.5 * (D - 3.0);
  const double u = eta * p / z;
  double log_g = (2.0 * n - 2.0) * std::log(2.0) + D * std::log(2.0 * n + D - 3.0) +
                 specfun::log_gamma(n + 0.5 * (D - 1.0)) - D * std::log(z) -
                 0.5 * (D + 1.0) * std::log(pi) - specfun::log_gamma(n) -
                 (2.0 * n + D - 1.0) * std::log1p(u * u);
  if (n > 1) {
    if (u == 0.0) {
      return 0.0;
    }
    log_g += (2.0 * n - 2.0) * std::log(u);
  }
  const double ls = log_sine_product(n, dim, angles);
  return std::isinf(ls) ? 0.0 : std::exp(log_g + ls);
}

} // namespace hydrocx
