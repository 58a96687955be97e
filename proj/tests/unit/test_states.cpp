#include "doctest.h"

#include "hydrocx/error.hpp"
#include "hydrocx/oracle.hpp"
#include "hydrocx/states.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace hydrocx;
using std::numbers::pi;

namespace {

std::vector<double> random_angles(std::mt19937& rng, int dim) {
  std::uniform_real_distribution<double> th(0.0, pi), ph(0.0, 2 * pi);
  std::vector<double> a;
  for (int j = 0; j < dim - 2; ++j) {
    a.push_back(th(rng));
  }
  a.push_back(ph(rng));
  return a;
}

void check_close(double a, double b, double tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  CHECK(std::abs(a - b) <= tol * scale + 1e-300);
}

} // namespace

TEST_CASE("validate_state examples") {
  CHECK_NOTHROW(validate_state(3, 2, {1, 1}));
  CHECK_NOTHROW(validate_state(4, 3, {2, 1, 1}));
  try {
    validate_state(3, 2, {2, 0});
    FAIL("expected StateError");
  } catch (const StateError& e) {
    CHECK(e.violation().kind == Violation::LExceedsN);
    CHECK(std::string(e.what()).find("l ≤ n−1 violated") != std::string::npos);
  }
}

TEST_CASE("each violation is reported distinctly") {
  auto kind = [](int d, int n, std::vector<int> mu) {
    auto v = find_violation(d, n, mu);
    REQUIRE(v.has_value());
    return *v;
  };
  CHECK(kind(1, 1, {}).kind == Violation::DimensionTooSmall);
  CHECK(kind(3, 0, {0, 0}).kind == Violation::PrincipalNotPositive);
  CHECK(kind(3, 1, {0}).kind == Violation::WrongMuLength);
  CHECK(kind(3, 2, {1, -1}).kind == Violation::NegativeMu);
  const auto chain = kind(5, 4, {1, 2, 0, 0});
  CHECK(chain.kind == Violation::ChainIncreases);
  CHECK(chain.index == 2);
  CHECK_FALSE(find_violation(3, 1, std::vector<int>{0, 0}).has_value());
}

TEST_CASE("enumerate_states") {
  auto s = enumerate_states(3, 2);
  // n=1: (0,0); n=2: (0,0),(1,0),(1,1)
  CHECK(s.size() == 4);
  for (const auto& st : enumerate_states(4, 3)) {
    CHECK_FALSE(find_violation(st.dim, st.n, st.mu).has_value());
  }
  CHECK(circular_state(3, 5).mu == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("derived_params examples") {
  auto p = derived_params(validate_state(3, 1, {0, 0}), NuclearCharge{1});
  CHECK(p.eta == 1.0);
  CHECK(p.L == 0.0);
  CHECK(p.lambda == 0.5);
  CHECK(p.energy == -1.0);
  p = derived_params(validate_state(2, 1, {0}), NuclearCharge{1});
  CHECK(p.eta == 0.5);
  CHECK(p.L == -0.5);
  CHECK(p.lambda == 0.25);
  CHECK(p.energy == -4.0);
  p = derived_params(validate_state(5, 3, {2, 2, 2, 2}), NuclearCharge{2});
  CHECK(p.eta == 4.0);
  CHECK(p.L == 3.0);
  CHECK(p.lambda == 1.0);
  CHECK(p.energy == -0.25);
  CHECK_THROWS(NuclearCharge{0.0});
  CHECK_THROWS(NuclearCharge{-1.0});
}

TEST_CASE("ground-state densities") {
  const auto gs = validate_state(3, 1, {0, 0});
  const NuclearCharge Z1{1};
  const std::vector<double> ang{0.7, 1.9};
  CHECK(position_density(gs, Z1, 0.0, ang) == doctest::Approx(1 / pi).epsilon(1e-14));
  for (double r : {0.0, 0.3, 1.0, 4.0}) {
    CHECK(position_density(gs, Z1, r, ang) == doctest::Approx(std::exp(-2 * r) / pi).epsilon(1e-13));
  }
  CHECK(momentum_density(gs, Z1, 0.0, ang) == doctest::Approx(8 / (pi * pi)).epsilon(1e-13));
  for (double p : {0.0, 0.5, 1.0, 3.0}) {
    CHECK(momentum_density(gs, Z1, p, ang) ==
          doctest::Approx(8 / (pi * pi) * std::pow(1 + p * p, -4)).epsilon(1e-13));
  }
  CHECK(circular_momentum_density(1, 3, Z1, 1.0, ang) == doctest::Approx(0.050660591821).epsilon(1e-10));
  CHECK_THROWS_AS(position_radial_density(gs, Z1, -1.0), DomainError);
  CHECK_THROWS_AS(momentum_radial_density(gs, Z1, -1.0), DomainError);
}

TEST_CASE("radial node at the origin for l > 0") {
  const auto s = validate_state(3, 2, {1, 0});
  CHECK(position_radial_density(s, NuclearCharge{1}, 0.0) == 0.0);
}

TEST_CASE("angular factors") {
  const auto f = make_angular_factor(3, 1, 0, 0);
  CHECK(f.alpha_j == 0.5);
  CHECK(angular_density_factor(f, pi / 2) == doctest::Approx(0.5));
  const auto s = validate_state(3, 1, {0, 0});
  const std::vector<double> ang{0.4, 2.0};
  CHECK(hyperspherical_density(s, ang) == doctest::Approx(1 / (4 * pi)));
  // circular D=3 n=2: factor ∝ sin²θ, normalized: (3/4) sin²θ
  const auto c = make_angular_factor(3, 1, 1, 1);
  for (double t : {0.2, 1.0, 2.5}) {
    CHECK(angular_density_factor(c, t) == doctest::Approx(0.75 * std::sin(t) * std::sin(t)));
  }
  CHECK_THROWS_AS(angular_density_factor(c, -0.1), DomainError);
  CHECK_THROWS_AS(angular_density_factor(c, 3.2), DomainError);
}

TEST_CASE("factorization consistency") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ur(0.0, 10.0);
  const NuclearCharge Z{1.7};
  for (int dim : {2, 3, 4, 6}) {
    for (const auto& s : enumerate_states(dim, 3)) {
      for (int t = 0; t < 5; ++t) {
        const auto ang = random_angles(rng, dim);
        const double r = ur(rng);
        double prod = 1 / (2 * pi);
        const auto facs = angular_factors(s);
        CHECK(facs.size() == static_cast<std::size_t>(dim - 2));
        for (std::size_t j = 0; j < facs.size(); ++j) {
          prod *= angular_density_factor(facs[j], ang[j]);
        }
        check_close(hyperspherical_density(s, ang), prod, 1e-14);
        check_close(position_density(s, Z, r, ang), position_radial_density(s, Z, r) * prod, 1e-14);
        check_close(momentum_density(s, Z, r, ang), momentum_radial_density(s, Z, r) * prod, 1e-14);
      }
    }
  }
}

TEST_CASE("circular closed forms equal the generic pipeline") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  for (int dim : {2, 3, 4, 5, 15}) {
    for (int n = 1; n <= 5; ++n) {
      const auto s = circular_state(n, dim);
      const NuclearCharge Z{n == 2 ? 1.0 : 0.5 + n};
      const double scale = derived_params(s, Z).lambda;
      for (int t = 0; t < 100; ++t) {
        const auto ang = random_angles(rng, dim);
        const double r = 6 * scale * dim * ur(rng);
        const double p = 3 * Z.value() / derived_params(s, Z).eta * ur(rng);
        CAPTURE(dim);
        CAPTURE(n);
        check_close(circular_position_density(n, dim, Z, r, ang), position_density(s, Z, r, ang), 1e-12);
        check_close(circular_momentum_density(n, dim, Z, p, ang), momentum_density(s, Z, p, ang), 1e-12);
      }
    }
  }
}

TEST_CASE("Z scaling of densities") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> ur(0.0, 6.0);
  const NuclearCharge one{1.0};
  for (int dim : {2, 3, 4, 6}) {
    for (const auto& s : enumerate_states(dim, 3)) {
      for (double z : {2.5, 37.0}) {
        const NuclearCharge Z{z};
        for (int t = 0; t < 5; ++t) {
          const auto ang = random_angles(rng, dim);
          const double x = ur(rng);
          check_close(position_density(s, Z, x / z, ang),
                      std::pow(z, dim) * position_density(s, one, x, ang), 1e-12);
          check_close(momentum_density(s, Z, x * z, ang),
                      std::pow(z, -dim) * momentum_density(s, one, x, ang), 1e-12);
        }
      }
    }
  }
}

TEST_CASE("normalization battery") {
  for (int dim : {2, 3, 4, 6}) {
    for (const auto& s : enumerate_states(dim, 4)) {
      CAPTURE(to_string(s));
      for (Space sp : {Space::Position, Space::Momentum}) {
        CHECK(std::abs(oracle::normalization(s, NuclearCharge{1.3}, sp).value - 1.0) < 1e-8);
      }
    }
  }
}

TEST_CASE("amplitude derivatives match finite differences") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> ur(0.05, 1.0), ut(0.05, pi - 0.05);
  for (int dim : {2, 3, 5}) {
    for (const auto& s : enumerate_states(dim, 3)) {
      const NuclearCharge Z{1.0};
      for (int t = 0; t < 50; ++t) {
        const double r = 12.0 * ur(rng) * s.n * s.n;
        const double h = 1e-5 * r;
        const double fd = (position_radial_amplitude(s, Z, r + h).value -
                           position_radial_amplitude(s, Z, r - h).value) / (2 * h);
        const double an = position_radial_amplitude(s, Z, r).derivative;
        CHECK(std::abs(an - fd) <= 1e-7 * std::max(1.0, std::abs(fd)) + 1e-7 * std::abs(an));

        const double p = 2.0 * ur(rng);
        const double hp = 1e-6 * p;
        const double fdp = (momentum_radial_amplitude(s, Z, p + hp).value -
                            momentum_radial_amplitude(s, Z, p - hp).value) / (2 * hp);
        const double anp = momentum_radial_amplitude(s, Z, p).derivative;
        CHECK(std::abs(anp - fdp) <= 1e-7 * std::max(1.0, std::abs(fdp)));

        for (const auto& f : angular_factors(s)) {
          const double th = ut(rng);
          const double ht = 1e-6;
          const double fdt =
              (angular_amplitude(f, th + ht).value - angular_amplitude(f, th - ht).value) / (2 * ht);
          CHECK(std::abs(angular_amplitude(f, th).derivative - fdt) <= 1e-7 * std::max(1.0, std::abs(fdt)));
        }
      }
    }
  }
}
