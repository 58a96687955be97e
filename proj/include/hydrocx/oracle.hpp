#pragma once

#include "hydrocx/common.hpp"
#include "hydrocx/quadrature.hpp"
#include "hydrocx/states.hpp"

// Brute-force evaluation of every measure straight from density values.
// Nothing in here may use the closed forms of the measures module; the
// product structure of the densities is used to reduce everything to 1-D
// integrals over r (or p) and the polar angles.
namespace hydrocx::oracle {

/// ∫ density over all space.
Estimate normalization(const HyperState& s, NuclearCharge Z, Space space,
                       const QuadratureSpec& q = {});

/// Radial moment <r^k> (or <p^k>). Throws DomainError if it diverges.
Estimate moment(const HyperState& s, NuclearCharge Z, Space space, int k,
                const QuadratureSpec& q = {});

/// -∫ rho ln rho.
Estimate entropy(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q = {});

/// ∫ rho^2.
Estimate disequilibrium(const HyperState& s, NuclearCharge Z, Space space,
                        const QuadratureSpec& q = {});

/// ∫ |grad rho|^2 / rho, from analytic derivatives of the density factors.
Estimate fisher(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q = {});

/// <r^2> - <r>^2.
Estimate variance(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q = {});

MeasureSet measures(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q = {});

} // namespace hydrocx::oracle
