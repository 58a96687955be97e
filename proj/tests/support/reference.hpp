#pragma once

// Reference integrators used only by the tests. They share no code with the
// library's adaptive Gauss-Kronrod driver.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace reference {

// Romberg extrapolation on [a, b] for smooth integrands.
inline double romberg(const std::function<double(double)>& f, double a, double b, int levels = 18) {
  std::vector<double> prev(levels), cur(levels);
  double h = b - a;
  prev[0] = 0.5 * h * (f(a) + f(b));
  for (int i = 1; i < levels; ++i) {
    h *= 0.5;
    double sum = 0.0;
    const long m = 1L << (i - 1);
    for (long k = 0; k < m; ++k) {
      sum += f(a + (2 * k + 1) * h);
    }
    cur[0] = 0.5 * prev[0] + h * sum;
    double p4 = 4.0;
    for (int j = 1; j <= i; ++j, p4 *= 4.0) {
      cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (p4 - 1.0);
    }
    if (i > 6 && std::abs(cur[i] - prev[i - 1]) < 1e-15 * std::abs(cur[i])) {
      return cur[i];
    }
    std::swap(prev, cur);
  }
  return prev[levels - 1];
}

// Composite Simpson on a uniform grid.
inline double simpson(const std::function<double(double)>& f, double a, double b, long panels) {
  if (panels % 2) {
    ++panels;
  }
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (long i = 1; i < panels; ++i) {
    s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  }
  return s * h / 3.0;
}

// -∫γ ln γ for the 3-D ground state γ(p) = (8/π²)(1+p²)^{-4}, Z = 1.
// With p = tan t the integrand becomes smooth on [0, π/2].
inline double ground_state_momentum_entropy_3d() {
  using std::numbers::pi;
  const double c = 8.0 / (pi * pi);
  auto g = [&](double t) {
    const double ct = std::cos(t);
    if (ct <= 0.0) {
      return 0.0;
    }
    const double st = std::sin(t);
    return -4.0 * pi * c * st * st * std::pow(ct, 4) * (std::log(c) + 8.0 * std::log(ct));
  };
  return simpson(g, 0.0, pi / 2, 400000);
}

// E_1 of the orthonormal Laguerre polynomial 1 - x (alpha = 0):
// -∫ x e^{-x} (1-x)^2 ln (1-x)^2 dx. The substitution x = 1 ∓ t^4 moves the
// log zero to a smooth t^11 ln t.
inline double entropic_e1_laguerre_1_0() {
  auto g = [](double x) {
    const double p2 = (1 - x) * (1 - x);
    return p2 > 0 ? -x * std::exp(-x) * p2 * std::log(p2) : 0.0;
  };
  auto left = [&](double t) { return g(1 - std::pow(t, 4)) * 4 * t * t * t; };
  auto right = [&](double t) { return g(1 + std::pow(t, 4)) * 4 * t * t * t; };
  return romberg(left, 0.0, 1.0) + romberg(right, 0.0, 3.2);
}

} // namespace reference
