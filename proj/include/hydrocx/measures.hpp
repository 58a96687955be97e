#pragma once

#include "hydrocx/common.hpp"
#include "hydrocx/orthopoly.hpp"
#include "hydrocx/quadrature.hpp"
#include "hydrocx/states.hpp"

// Closed and semi-closed expressions for the single-component measures.
// Only the polynomial functionals (entropic integrals, quartic integrals)
// need quadrature; everything else is gamma/digamma arithmetic.
namespace hydrocx::measures {

struct EntropicIntegralSpec {
  orthopoly::PolySpec poly;
  int moment = 0; // weight x^moment, 0 or 1
};

/// E_i[p] = -∫ x^i omega(x) p(x)^2 ln p(x)^2 dx, split at the zeros of p.
Estimate entropic_integral(const EntropicIntegralSpec& spec, const QuadratureSpec& q = {});

// Shannon entropy coefficients.
double coefficient_a(const HyperState& s); // position radial constant
double coefficient_b(const HyperState& s); // angular constant, includes ln 2pi
double coefficient_f(const HyperState& s); // momentum radial constant

/// Pieces of the Shannon entropy; `z_term` is -D ln Z (position) or
/// +D ln Z (momentum). The Z-independent aggregate T = total - z_term.
struct ShannonParts {
  double radial_coefficient;  // A or F
  double angular_coefficient; // B
  Estimate radial_integral;   // E_1/(2 eta) or E_0 of the momentum Gegenbauer
  Estimate angular_integrals; // sum_j E_0 of the angular Gegenbauers
  double z_term;

  Estimate t_value() const;
  Estimate total() const;
};

ShannonParts shannon_parts(const HyperState& s, NuclearCharge Z, Space space,
                           const QuadratureSpec& q = {});
Estimate shannon_entropy(const HyperState& s, NuclearCharge Z, Space space,
                         const QuadratureSpec& q = {});

/// ∫|Y|^4 over the sphere, as (1/2pi) times a product of quartic Gegenbauer
/// integrals.
Estimate hyperangular_quartic(const HyperState& s, const QuadratureSpec& q = {});

/// ∫ rho^2, radial factor from direct quadrature of the squared density.
Estimate disequilibrium(const HyperState& s, NuclearCharge Z, Space space,
                        const QuadratureSpec& q = {});

double fisher_information(const HyperState& s, NuclearCharge Z, Space space);

/// Position variance, exact.
double position_variance(const HyperState& s, NuclearCharge Z);

/// Momentum moments in their commonly quoted closed form. <p^2> is right; the
/// quoted <p> = 2Z/(pi eta) does not follow from the momentum density, so
/// the canonical momentum variance comes from the oracle instead.
struct PrintedMomentumMoments {
  double mean;
  double second_moment;
  double variance;
};
PrintedMomentumMoments printed_momentum_moments(const HyperState& s, NuclearCharge Z);

struct Variance {
  double value;
  bool use_oracle; // true: value is the printed form only, callers must use the oracle
};
Variance variance(const HyperState& s, NuclearCharge Z, Space space);

/// Closed-form measure set. The momentum variance is taken from the oracle
/// (see printed_momentum_moments); normalization is exactly one by
/// orthonormality.
MeasureSet closed_form_measures(const HyperState& s, NuclearCharge Z, Space space,
                                const QuadratureSpec& q = {});

// Circular states (mu_i = n - 1), pure gamma/digamma closed forms.
double circular_disequilibrium(int n, int dim, NuclearCharge Z, Space space);
double circular_shannon(int n, int dim, NuclearCharge Z, Space space);
/// The digamma constant A(n, D) of the circular momentum entropy.
double circular_momentum_coefficient(int n, int dim);

// Disequilibrium through the radial functionals as they are usually
// printed: K1 with weight x^{-D-5} and K3 in the variable u = eta p / Z.
// The K1 form is NaN when its integral diverges at the origin.
Estimate disequilibrium_printed_k1(const HyperState& s, NuclearCharge Z,
                                   const QuadratureSpec& q = {});
Estimate disequilibrium_printed_k3(const HyperState& s, NuclearCharge Z,
                                   const QuadratureSpec& q = {});

} // namespace hydrocx::measures
