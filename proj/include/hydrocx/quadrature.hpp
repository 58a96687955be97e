#pragma once

#include <functional>
#include <limits>
#include <span>

namespace hydrocx {

/// Tolerances and budget shared by every numerical integral in the library.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_panels = 4096;
  // A semi-infinite range is cut where the remaining L1 mass falls below
  // tail_cut times the running L1 mass.
  double tail_cut = 1e-18;

  /// Throws DomainError unless tolerances are positive and max_panels >= 16.
  void validate() const;
  QuadratureSpec tightened(double factor) const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
  // Upper end actually integrated; +inf only if the range was finite and open.
  double truncated_at = std::numeric_limits<double>::infinity();
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (21 point) integration over [a, b].
///
/// `b` may be +inf, in which case the range is scanned in geometrically
/// growing chunks starting at width `scale` until the tail criterion of
/// `q.tail_cut` is met; the neglected tail is folded into the error.
/// `breakpoints` are points where f has a kink or integrable singularity;
/// they become panel boundaries and are never evaluated.
///
/// Throws AccuracyError carrying the partial estimate when the panel budget
/// runs out before max(abs_tol, rel_tol*|I|) is reached.
QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& q,
                              std::span<const double> breakpoints = {}, double scale = 1.0);

} // namespace hydrocx
