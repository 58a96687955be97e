#pragma once

namespace hydrocx::specfun {

/// ln Γ(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0. Throws DomainError otherwise.
double digamma(double x);

/// ln[Γ(a)/Γ(b)], both arguments positive.
double log_gamma_ratio(double a, double b);

/// ln of the Pochhammer symbol (a)_k = Γ(a+k)/Γ(a).
double log_pochhammer(double a, double k);

} // namespace hydrocx::specfun
