#include "hydrocx/oracle.hpp"

#include "hydrocx/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace hydrocx::oracle {

namespace {

using std::numbers::pi;

// Radial integrals are done in a dimensionless variable t: x = r/lambda in
// position space, u = eta p / Z in momentum space. `jac` converts dt to the
// physical differential and `to_phys` maps t back to r or p.
struct RadialFrame {
  HyperState state;
  NuclearCharge Z;
  Space space;
  double to_phys; // r = to_phys * t
  std::vector<double> breaks;
  double scale; // width of the first tail chunk
};

RadialFrame make_frame(const HyperState& s, NuclearCharge Z, Space space) {
  const auto prm = derived_params(s, Z);
  RadialFrame f{s, Z, space, 0.0, {}, 1.0};
  if (space == Space::Position) {
    f.to_phys = prm.lambda;
    f.breaks = orthopoly::roots_of(radial_laguerre(s));
    f.scale = 2.0;
  } else {
    f.to_phys = Z.value() / prm.eta;
    // Zeros of C̃(y) sit at u = sqrt((1-y)/(1+y)).
    for (double y : orthopoly::roots_of(momentum_gegenbauer(s))) {
      f.breaks.push_back(std::sqrt((1.0 - y) / (1.0 + y)));
    }
    std::sort(f.breaks.begin(), f.breaks.end());
    f.scale = 1.0;
  }
  return f;
}

double radial_density(const RadialFrame& f, double k) {
  return f.space == Space::Position ? position_radial_density(f.state, f.Z, k)
                                    : momentum_radial_density(f.state, f.Z, k);
}

orthopoly::ValueAndDerivative radial_amplitude(const RadialFrame& f, double k) {
  return f.space == Space::Position ? position_radial_amplitude(f.state, f.Z, k)
                                    : momentum_radial_amplitude(f.state, f.Z, k);
}

// ∫_0^inf g(k) k^{D-1} dk with k the physical radius, g given in terms of k.
template <class G>
Estimate radial_integral(const RadialFrame& f, G&& g, const QuadratureSpec& q) {
  const int dm1 = f.state.dim - 1;
  const double c = f.to_phys;
  auto integrand = [&](double t) {
    const double k = c * t;
    const double v = g(k);
    return v == 0.0 ? 0.0 : v * std::pow(k, dm1) * c;
  };
  const auto r = integrate_adaptive(integrand, 0.0, HUGE_VAL, q, f.breaks, f.scale);
  return {r.value, r.error};
}

// ∫_0^pi g(theta) (sin theta)^{D-1-j} dtheta for one angular factor.
template <class G>
Estimate angular_integral(const AngularFactorSpec& spec, G&& g, const QuadratureSpec& q) {
  std::vector<double> breaks;
  for (double x : orthopoly::roots_of(spec.poly())) {
    breaks.push_back(std::acos(x));
  }
  const int m = spec.measure_power();
  auto integrand = [&](double th) {
    const double v = g(th);
    return v == 0.0 ? 0.0 : v * std::pow(std::sin(th), m);
  };
  const auto r = integrate_adaptive(integrand, 0.0, pi, q, breaks);
  return {r.value, r.error};
}

double neg_xlogx(double v) { return v > 0.0 ? -v * std::log(v) : 0.0; }

void require_convergent_moment(const HyperState& s, Space space, int k) {
  // Both radial densities behave like k^{2l} at the origin; the momentum
  // density falls off like p^{-(2l+2D+2)}.
  const int l = s.l();
  const int D = s.dim;
  bool ok = 2 * l + D + k > 0;
  if (space == Space::Momentum) {
    ok = ok && k < 2 * l + D + 2;
  }
  if (!ok) {
    throw DomainError("moment <" + std::string(space == Space::Position ? "r" : "p") + "^" +
                      std::to_string(k) + "> diverges for " + to_string(s));
  }
}

} // namespace

Estimate normalization(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q) {
  const auto frame = make_frame(s, Z, space);
  Estimate total = radial_integral(frame, [&](double k) { return radial_density(frame, k); }, q);
  for (const auto& a : angular_factors(s)) {
    total = total * angular_integral(a, [&](double th) { return angular_density_factor(a, th); }, q);
  }
  // The azimuthal factor 1/(2 pi) integrates to one over phi.
  return total;
}

Estimate moment(const HyperState& s, NuclearCharge Z, Space space, int k, const QuadratureSpec& q) {
  require_convergent_moment(s, space, k);
  const auto frame = make_frame(s, Z, space);
  return radial_integral(
      frame, [&](double x) { return x == 0.0 ? 0.0 : radial_density(frame, x) * std::pow(x, k); },
      q);
}

Estimate entropy(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q) {
  const auto frame = make_frame(s, Z, space);
  Estimate total =
      radial_integral(frame, [&](double k) { return neg_xlogx(radial_density(frame, k)); }, q);
  // Entropy of a normalized product is the sum of the factor entropies.
  total.value += std::log(2.0 * pi);
  for (const auto& a : angular_factors(s)) {
    total = total + angular_integral(
                        a, [&](double th) { return neg_xlogx(angular_density_factor(a, th)); }, q);
  }
  return total;
}

Estimate disequilibrium(const HyperState& s, NuclearCharge Z, Space space,
                        const QuadratureSpec& q) {
  const auto frame = make_frame(s, Z, space);
  Estimate total = radial_integral(
      frame,
      [&](double k) {
        const double v = radial_density(frame, k);
        return v * v;
      },
      q);
  total = (1.0 / (2.0 * pi)) * total;
  for (const auto& a : angular_factors(s)) {
    total = total * angular_integral(
                        a,
                        [&](double th) {
                          const double v = angular_density_factor(a, th);
                          return v * v;
                        },
                        q);
  }
  return total;
}

Estimate fisher(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q) {
  // With rho = A^2, |grad rho|^2 / rho = 4 |grad A|^2. In hyperspherical
  // coordinates the theta_j component carries the metric factor
  // 1 / (r^2 prod_{i<j} sin^2 theta_i), and the product form of rho makes
  // each term a product of 1-D expectations.
  const auto frame = make_frame(s, Z, space);
  Estimate total = radial_integral(
      frame,
      [&](double k) {
        const double d = radial_amplitude(frame, k).derivative;
        return 4.0 * d * d;
      },
      q);

  const auto factors = angular_factors(s);
  bool have_inv_r2 = false;
  Estimate inv_r2;
  Estimate metric{1.0, 0.0}; // prod_{i<j} <sin^-2 theta_i>
  for (const auto& a : factors) {
    const Estimate grad = angular_integral(
        a,
        [&](double th) {
          const double d = angular_amplitude(a, th).derivative;
          return 4.0 * d * d;
        },
        q);
    if (grad.value != 0.0) {
      if (!have_inv_r2) {
        inv_r2 = moment(s, Z, space, -2, q);
        have_inv_r2 = true;
      }
      total = total + inv_r2 * metric * grad;
    }
    if (&a != &factors.back()) {
      metric = metric * angular_integral(
                            a,
                            [&](double th) {
                              const double sn = std::sin(th);
                              return angular_density_factor(a, th) / (sn * sn);
                            },
                            q);
    }
  }
  return total;
}

Estimate variance(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q) {
  const Estimate m1 = moment(s, Z, space, 1, q);
  const Estimate m2 = moment(s, Z, space, 2, q);
  return m2 - m1 * m1;
}

MeasureSet measures(const HyperState& s, NuclearCharge Z, Space space, const QuadratureSpec& q) {
  MeasureSet m;
  m.space = space;
  m.provenance = Provenance::Oracle;
  m.normalization = normalization(s, Z, space, q);
  m.disequilibrium = disequilibrium(s, Z, space, q);
  m.shannon = entropy(s, Z, space, q);
  m.fisher = fisher(s, Z, space, q);
  m.variance = variance(s, Z, space, q);
  return m;
}

} // namespace hydrocx::oracle
