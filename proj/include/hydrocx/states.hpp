#pragma once

#include "hydrocx/orthopoly.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hydrocx {

/// Positive Coulomb strength Z in atomic units.
class NuclearCharge {
public:
  explicit NuclearCharge(double z);
  double value() const noexcept { return z_; }

private:
  double z_;
};

/// A D-dimensional hydrogenic orbital: principal number n and the
/// hyperangular chain mu = (mu_1 = l, ..., mu_{D-1} = |m|).
struct HyperState {
  int dim = 3;
  int n = 1;
  std::vector<int> mu;

  int l() const { return mu.front(); }
  int m_abs() const { return mu.back(); }
  bool operator==(const HyperState&) const = default;
};

std::string to_string(const HyperState& s);
std::string mu_string(const HyperState& s);

enum class Violation {
  DimensionTooSmall,
  PrincipalNotPositive,
  WrongMuLength,
  NegativeMu,
  LExceedsN,
  ChainIncreases,
};

struct StateViolation {
  Violation kind;
  int index = -1; // 1-based position in the mu chain where relevant
  std::string message;
};

class StateError : public std::invalid_argument {
public:
  explicit StateError(StateViolation v)
      : std::invalid_argument(v.message), violation_(std::move(v)) {}
  const StateViolation& violation() const noexcept { return violation_; }

private:
  StateViolation violation_;
};

std::optional<StateViolation> find_violation(int dim, int n, std::span<const int> mu);

/// Throws StateError describing the first violated constraint.
HyperState validate_state(int dim, int n, std::vector<int> mu);

/// mu_i = n - 1 for all i.
HyperState circular_state(int n, int dim);

/// Every valid state with the given dimension and 1 <= n <= n_max, ordered
/// by n then lexicographically by mu.
std::vector<HyperState> enumerate_states(int dim, int n_max);

struct DerivedParams {
  double eta;    // n + (D-3)/2
  double L;      // l + (D-3)/2
  double lambda; // eta / (2Z)
  double energy; // -Z^2 / eta^2
};

DerivedParams derived_params(const HyperState& s, NuclearCharge Z);

// ---------------------------------------------------------------------------
// Angular part. |Y|^2 = (1/2pi) * prod_{j=1}^{D-2} factor_j(theta_j), where
// factor_j = [C̃^{alpha_j+mu_{j+1}}_{mu_j-mu_{j+1}}(cos t)]^2 (sin t)^{2 mu_{j+1}}
// integrates to one against (sin t)^{D-1-j} dt on [0, pi].

struct AngularFactorSpec {
  int dim;
  int j; // 1 .. D-2
  double alpha_j;
  int mu_j;
  int mu_j1;

  orthopoly::GegenbauerSpec poly() const { return {mu_j - mu_j1, alpha_j + mu_j1}; }
  int measure_power() const { return dim - 1 - j; }
};

AngularFactorSpec make_angular_factor(int dim, int j, int mu_j, int mu_j1);
std::vector<AngularFactorSpec> angular_factors(const HyperState& s);

double angular_density_factor(const AngularFactorSpec& spec, double theta);

/// sqrt(factor_j) with its theta derivative.
orthopoly::ValueAndDerivative angular_amplitude(const AngularFactorSpec& spec, double theta);

/// |Y|^2 at angles (theta_1, ..., theta_{D-2}, phi); phi does not enter.
double hyperspherical_density(const HyperState& s, std::span<const double> angles);

// ---------------------------------------------------------------------------
// Radial parts. Full density = radial part * |Y|^2; each radial part
// integrates to one against r^{D-1} dr (resp. p^{D-1} dp).

orthopoly::LaguerreSpec radial_laguerre(const HyperState& s);
orthopoly::GegenbauerSpec momentum_gegenbauer(const HyperState& s);

double position_radial_density(const HyperState& s, NuclearCharge Z, double r);
double momentum_radial_density(const HyperState& s, NuclearCharge Z, double p);

/// sqrt of the radial density and its derivative with respect to r (or p).
orthopoly::ValueAndDerivative position_radial_amplitude(const HyperState& s, NuclearCharge Z,
                                                        double r);
orthopoly::ValueAndDerivative momentum_radial_amplitude(const HyperState& s, NuclearCharge Z,
                                                        double p);

double position_density(const HyperState& s, NuclearCharge Z, double r,
                        std::span<const double> angles);
double momentum_density(const HyperState& s, NuclearCharge Z, double p,
                        std::span<const double> angles);

// Closed forms for circular states, evaluated directly.
double circular_position_density(int n, int dim, NuclearCharge Z, double r,
                                 std::span<const double> angles);
double circular_momentum_density(int n, int dim, NuclearCharge Z, double p,
                                 std::span<const double> angles);

} // namespace hydrocx
