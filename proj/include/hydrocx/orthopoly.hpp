#pragma once

#include <variant>
#include <vector>

namespace hydrocx::orthopoly {

/// Orthonormal Laguerre family: unit norm against x^alpha e^{-x} on (0, inf).
/// Sign convention is the classical one, L̃_k(0) > 0.
struct LaguerreSpec {
  int degree = 0;
  double alpha = 0.0; // > -1
};

/// Orthonormal Gegenbauer family: unit norm against (1-x^2)^{lambda-1/2} on
/// (-1, 1), positive leading coefficient. lambda > 0.
struct GegenbauerSpec {
  int degree = 0;
  double lambda = 0.5;
};

using PolySpec = std::variant<LaguerreSpec, GegenbauerSpec>;

struct ValueAndDerivative {
  double value;
  double derivative;
};

// Throws DomainError if alpha <= -1 or degree < 0.
void check(const LaguerreSpec& spec);
// Throws DomainError if lambda <= 0 or degree < 0.
void check(const GegenbauerSpec& spec);

double laguerre_weight(double alpha, double x);
double gegenbauer_weight(double lambda, double x);

/// Integral of the weight over its support, ∫ω.
double laguerre_weight_mass(double alpha);
double gegenbauer_weight_mass(double lambda);

double eval_laguerre_on(const LaguerreSpec& spec, double x);
double eval_gegenbauer_on(const GegenbauerSpec& spec, double x);

/// Value and first derivative, obtained by differentiating the three-term
/// recurrence.
ValueAndDerivative eval_laguerre_on_d(const LaguerreSpec& spec, double x);
ValueAndDerivative eval_gegenbauer_on_d(const GegenbauerSpec& spec, double x);

/// The degree simple zeros inside the support, strictly increasing.
std::vector<double> roots_of(const LaguerreSpec& spec);
std::vector<double> roots_of(const GegenbauerSpec& spec);
std::vector<double> roots_of(const PolySpec& spec);

} // namespace hydrocx::orthopoly
