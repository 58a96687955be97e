#pragma once

#include "hydrocx/common.hpp"
#include "hydrocx/quadrature.hpp"
#include "hydrocx/states.hpp"

namespace hydrocx::complexity {

struct BoundCheck {
  double value;
  double bound;
  bool satisfied;
  double margin; // value - bound
};

/// Lower bounds C_LMC >= 1, C_FS >= D, C_CR >= D^2 for D-dimensional
/// densities. The first two are theorems; the Cramér-Rao one is reported
/// only, since hydrogenic ground states already fall below D^2.
struct BoundReport {
  BoundCheck lmc;
  BoundCheck fisher_shannon;
  BoundCheck cramer_rao;
};

struct ComplexityTriple {
  Space space = Space::Position;
  Estimate lmc;
  Estimate fisher_shannon;
  Estimate cramer_rao;
  BoundReport bounds{};
};

/// D[rho] exp(S[rho]).
Estimate lmc(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q = {});

/// F[rho] exp(2 S[rho] / D) / (2 pi e), assembled from the Z-free entropy
/// aggregate so the charge cancels exactly.
Estimate fisher_shannon(const HyperState& s, NuclearCharge Z, Space space,
                        const QuadratureSpec& q = {});

/// F[rho] V[rho]. The momentum variance comes from the oracle.
Estimate cramer_rao(const HyperState& s, NuclearCharge Z, Space space,
                    const QuadratureSpec& q = {});

/// Cramér-Rao right-hand sides in the form usually printed (position uses
/// n - |m| and L^2 (L+1); momentum carries "-1"). Kept for comparison only.
double cramer_rao_printed(const HyperState& s, Space space);

/// F[gamma] times the printed momentum variance Z^2/eta^2 (1 - 4/pi^2).
double cramer_rao_printed_variance_pairing(const HyperState& s);

ComplexityTriple complexities(const HyperState& s, NuclearCharge Z, Space space,
                              const QuadratureSpec& q = {});

BoundReport bound_report(const ComplexityTriple& t, int dim);

/// Closed-form LMC complexity of the circular state (n, D), log-space.
double circular_lmc(int n, int dim, Space space);

/// Ground-state LMC: (e/2)^D in position space.
double ground_state_lmc(int dim, Space space);

} // namespace hydrocx::complexity
