#include "hydrocx/orthopoly.hpp"

#include "hydrocx/error.hpp"
#include "hydrocx/specfun.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hydrocx::orthopoly {

namespace {

// Jacobi-matrix coefficients of an orthonormal family:
//   x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}
struct Jacobi {
  virtual ~Jacobi() = default;
  virtual double a(int k) const = 0;
  virtual double b(int k) const = 0; // k >= 1
};

struct LaguerreJacobi final : Jacobi {
  double alpha;
  explicit LaguerreJacobi(double al) : alpha(al) {}
  double a(int k) const override { return 2.0 * k + alpha + 1.0; }
  double b(int k) const override { return std::sqrt(k * (k + alpha)); }
};

struct GegenbauerJacobi final : Jacobi {
  double lambda;
  explicit GegenbauerJacobi(double lam) : lambda(lam) {}
  double a(int) const override { return 0.0; }
  double b(int k) const override {
    return std::sqrt(k * (k + 2.0 * lambda - 1.0) /
                     (4.0 * (k + lambda) * (k + lambda - 1.0)));
  }
};

ValueAndDerivative run_recurrence(const Jacobi& J, int degree, double p0, double x) {
  double p_prev = 0.0, d_prev = 0.0;
  double p = p0, d = 0.0;
  for (int k = 0; k < degree; ++k) {
    const double bk = k > 0 ? J.b(k) : 0.0;
    const double bn = J.b(k + 1);
    const double p_next = ((x - J.a(k)) * p - bk * p_prev) / bn;
    const double d_next = ((x - J.a(k)) * d + p - bk * d_prev) / bn;
    p_prev = p;
    d_prev = d;
    p = p_next;
    d = d_next;
  }
  return {p, d};
}

std::vector<double> jacobi_eigenvalues(const Jacobi& J, int degree) {
  if (degree <= 0) {
    return {};
  }
  Eigen::VectorXd diag(degree);
  Eigen::VectorXd sub(std::max(degree - 1, 0));
  for (int k = 0; k < degree; ++k) {
    diag(k) = J.a(k);
    if (k + 1 < degree) {
      sub(k) = J.b(k + 1);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

template <class Eval>
void polish(std::vector<double>& roots, Eval&& eval) {
  for (double& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const auto vd = eval(r);
      if (vd.derivative == 0.0) {
        break;
      }
      const double step = vd.value / vd.derivative;
      r -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(r))) {
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
}

} // namespace

void check(const LaguerreSpec& spec) {
  if (spec.degree < 0 || !(spec.alpha > -1.0)) {
    throw DomainError("laguerre: need degree >= 0 and alpha > -1");
  }
}

void check(const GegenbauerSpec& spec) {
  if (spec.degree < 0 || !(spec.lambda > 0.0)) {
    throw DomainError("gegenbauer: need degree >= 0 and lambda > 0");
  }
}

double laguerre_weight(double alpha, double x) {
  if (x == 0.0) {
    return alpha == 0.0 ? 1.0 : 0.0;
  }
  return std::exp(alpha * std::log(x) - x);
}

double gegenbauer_weight(double lambda, double x) {
  const double s = (1.0 - x) * (1.0 + x);
  if (s <= 0.0) {
    return lambda == 0.5 ? 1.0 : (lambda > 0.5 ? 0.0 : HUGE_VAL);
  }
  return std::pow(s, lambda - 0.5);
}

double laguerre_weight_mass(double alpha) { return std::exp(specfun::log_gamma(alpha + 1.0)); }

double gegenbauer_weight_mass(double lambda) {
  return std::sqrt(std::numbers::pi) *
         std::exp(specfun::log_gamma_ratio(lambda + 0.5, lambda + 1.0));
}

ValueAndDerivative eval_laguerre_on_d(const LaguerreSpec& spec, double x) {
  check(spec);
  if (x < 0.0) {
    throw DomainError("laguerre: x must be non-negative, got " + std::to_string(x));
  }
  const double p0 = 1.0 / std::sqrt(laguerre_weight_mass(spec.alpha));
  auto vd = run_recurrence(LaguerreJacobi{spec.alpha}, spec.degree, p0, x);
  if (spec.degree % 2 == 1) {
    vd.value = -vd.value;
    vd.derivative = -vd.derivative;
  }
  return vd;
}

double eval_laguerre_on(const LaguerreSpec& spec, double x) {
  return eval_laguerre_on_d(spec, x).value;
}

ValueAndDerivative eval_gegenbauer_on_d(const GegenbauerSpec& spec, double x) {
  check(spec);
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("gegenbauer: |x| must not exceed 1, got " + std::to_string(x));
  }
  const double p0 = 1.0 / std::sqrt(gegenbauer_weight_mass(spec.lambda));
  return run_recurrence(GegenbauerJacobi{spec.lambda}, spec.degree, p0, x);
}

double eval_gegenbauer_on(const GegenbauerSpec& spec, double x) {
  return eval_gegenbauer_on_d(spec, x).value;
}

std::vector<double> roots_of(const LaguerreSpec& spec) {
  check(spec);
  auto roots = jacobi_eigenvalues(LaguerreJacobi{spec.alpha}, spec.degree);
  polish(roots, [&](double x) { return eval_laguerre_on_d(spec, std::max(x, 0.0)); });
  return roots;
}

std::vector<double> roots_of(const GegenbauerSpec& spec) {
  check(spec);
  auto roots = jacobi_eigenvalues(GegenbauerJacobi{spec.lambda}, spec.degree);
  polish(roots, [&](double x) { return eval_gegenbauer_on_d(spec, std::clamp(x, -1.0, 1.0)); });
  return roots;
}

std::vector<double> roots_of(const PolySpec& spec) {
  return std::visit([](const auto& s) { return roots_of(s); }, spec);
}

} // namespace hydrocx::orthopoly
