#include "hydrocx/quadrature.hpp"

#include "hydrocx/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace hydrocx {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

struct Panel {
  double a, b;
  double value, error, l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// Single application of the 10/21 point Gauss-Kronrod pair on [a, b].
Panel apply_rule(const Integrand& f, double a, double b) {
  const auto& x = Rule::abscissa();
  const auto& wk = Rule::weights();
  const auto& wg = Gauss::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  // 21-point rule: x[0] = 0 is a Kronrod-only node; odd indices are the
  // Gauss nodes of the embedded 10-point rule.
  double fc = f(c);
  double kron = fc * wk[0];
  double l1 = std::abs(fc) * wk[0];
  double gauss = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double fp = f(c + h * x[i]);
    const double fm = f(c - h * x[i]);
    kron += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    if (i % 2 == 1) {
      gauss += (fp + fm) * wg[i / 2];
    }
  }
  Panel p{a, b, kron * h, 0.0, l1 * std::abs(h)};
  p.error = std::abs((kron - gauss) * h);
  if (!std::isfinite(p.value) || !std::isfinite(p.error)) {
    std::ostringstream os;
    os << "integrand is not finite on [" << a << ", " << b << "]";
    throw DomainError(os.str());
  }
  return p;
}

std::vector<double> panel_edges(double a, double b, std::span<const double> breakpoints) {
  std::vector<double> edges{a};
  for (double x : breakpoints) {
    if (x > a && x < b) {
      edges.push_back(x);
    }
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

} // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_cut > 0.0) || max_panels < 16) {
    throw DomainError("QuadratureSpec: tolerances must be positive and max_panels >= 16");
  }
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
  QuadratureSpec q = *this;
  q.rel_tol /= factor;
  q.abs_tol /= factor;
  q.max_panels *= 4;
  return q;
}

QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& q,
                              std::span<const double> breakpoints, double scale) {
  q.validate();
  if (!(b > a)) {
    if (a == b) {
      return {0.0, 0.0, 0, b};
    }
    throw DomainError("integrate_adaptive: need a <= b");
  }
  if (!std::isfinite(a)) {
    throw DomainError("integrate_adaptive: lower limit must be finite");
  }

  std::vector<double> edges;
  double tail_error = 0.0;
  double upper = b;
  if (std::isinf(b)) {
    // Finite part up to the last breakpoint, then geometric chunks until
    // two consecutive chunks carry negligible L1 mass.
    double start = a;
    for (double x : breakpoints) {
      start = std::max(start, x);
    }
    edges = panel_edges(a, start, breakpoints);
    if (edges.size() == 1) {
      edges.clear();
      edges.push_back(a);
    }
    double running_l1 = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      running_l1 += apply_rule(f, edges[i], edges[i + 1]).l1;
    }
    double width = scale > 0.0 ? scale : 1.0;
    double x = start;
    int quiet = 0;
    int chunks = 0;
    while (quiet < 2) {
      if (++chunks > q.max_panels) {
        throw AccuracyError("integrate_adaptive: tail did not decay", 0.0, HUGE_VAL);
      }
      const Panel p = apply_rule(f, x, x + width);
      running_l1 += p.l1;
      edges.push_back(x + width);
      if (p.l1 <= q.tail_cut * running_l1) {
        ++quiet;
        tail_error = p.l1;
      } else {
        quiet = 0;
      }
      x += width;
      width *= 2.0;
    }
    upper = x;
  } else {
    edges = panel_edges(a, b, breakpoints);
  }

  std::priority_queue<Panel> heap;
  double total = 0.0;
  double total_err = 0.0;
  double total_l1 = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = apply_rule(f, edges[i], edges[i + 1]);
    total += p.value;
    total_err += p.error;
    total_l1 += p.l1;
    heap.push(p);
  }
  int panels = static_cast<int>(heap.size());

  // Roundoff in the L1 mass bounds what any refinement can achieve.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto target = [&] {
    return std::max({q.abs_tol, q.rel_tol * std::abs(total), 16.0 * eps * total_l1});
  };
  while (total_err > target()) {
    if (panels >= q.max_panels) {
      std::ostringstream os;
      os << "integrate_adaptive: panel budget " << q.max_panels << " exhausted (estimate "
         << total << ", error " << total_err << ")";
      throw AccuracyError(os.str(), total, total_err);
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in double precision.
      throw AccuracyError("integrate_adaptive: panel collapsed before convergence", total,
                          total_err);
    }
    const Panel left = apply_rule(f, worst.a, mid);
    const Panel right = apply_rule(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  // Re-sum to shed the accumulated cancellation of the incremental updates.
  double sum = 0.0, err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err + tail_error, panels, upper};
}

} // namespace hydrocx
