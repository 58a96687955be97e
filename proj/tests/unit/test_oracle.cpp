#include "doctest.h"

#include "hydrocx/error.hpp"
#include "hydrocx/oracle.hpp"
#include "reference.hpp"

#include <cmath>
#include <numbers>

using namespace hydrocx;
using std::numbers::pi;

namespace {
const HyperState kGs = validate_state(3, 1, {0, 0});
const NuclearCharge kOne{1.0};
} // namespace

TEST_CASE("ground-state moments") {
  CHECK(oracle::moment(kGs, kOne, Space::Position, 1).value == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(oracle::moment(kGs, kOne, Space::Momentum, 2).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(oracle::moment(kGs, kOne, Space::Momentum, 1).value ==
        doctest::Approx(8 / (3 * pi)).epsilon(1e-10));
  CHECK(oracle::moment(kGs, NuclearCharge{2}, Space::Position, 1).value ==
        doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("divergent moments are domain errors") {
  // momentum tail ~ p^{-2l-D-5}: <p^5> diverges for the 3-D ground state
  CHECK_THROWS_AS(oracle::moment(kGs, kOne, Space::Momentum, 5), DomainError);
  CHECK_NOTHROW(oracle::moment(kGs, kOne, Space::Momentum, 4));
  CHECK_THROWS_AS(oracle::moment(kGs, kOne, Space::Position, -3), DomainError);
  CHECK(oracle::moment(kGs, kOne, Space::Position, -1).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ground-state entropy") {
  CHECK(oracle::entropy(kGs, kOne, Space::Position).value ==
        doctest::Approx(3 + std::log(pi)).epsilon(1e-10));
  const double ref = reference::ground_state_momentum_entropy_3d();
  CHECK(std::abs(ref - 2.42186) < 1e-4);
  CHECK(oracle::entropy(kGs, kOne, Space::Momentum).value == doctest::Approx(ref).epsilon(1e-9));
  CHECK(oracle::entropy(kGs, NuclearCharge{2}, Space::Position).value ==
        doctest::Approx(3 + std::log(pi) - 3 * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("ground-state disequilibrium") {
  CHECK(oracle::disequilibrium(kGs, kOne, Space::Position).value ==
        doctest::Approx(1 / (8 * pi)).epsilon(1e-10));
  CHECK(oracle::disequilibrium(kGs, kOne, Space::Momentum).value ==
        doctest::Approx(33 / (16 * pi * pi)).epsilon(1e-10));
}

TEST_CASE("fisher information") {
  CHECK(oracle::fisher(kGs, kOne, Space::Position).value == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(oracle::fisher(kGs, kOne, Space::Momentum).value == doctest::Approx(12.0).epsilon(1e-9));
  CHECK(oracle::fisher(validate_state(3, 2, {1, 1}), kOne, Space::Position).value ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("ground-state momentum variance") {
  CHECK(oracle::variance(kGs, kOne, Space::Momentum).value ==
        doctest::Approx(1 - 64 / (9 * pi * pi)).epsilon(1e-9));
  CHECK(oracle::variance(kGs, kOne, Space::Position).value == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("oracle values are stable under a 10x tighter tolerance") {
  QuadratureSpec q;
  q.rel_tol = 1e-9;
  const auto tight = q.tightened(10.0);
  for (const auto& s : {validate_state(3, 3, {1, 0}), validate_state(4, 3, {2, 1, 0}),
                        validate_state(2, 4, {2}), circular_state(3, 6)}) {
    for (Space sp : {Space::Position, Space::Momentum}) {
      CAPTURE(to_string(s));
      const auto a = oracle::entropy(s, kOne, sp, q);
      const auto b = oracle::entropy(s, kOne, sp, tight);
      CHECK(std::abs(a.value - b.value) <= a.error + b.error + 1e-13);
      const auto c = oracle::disequilibrium(s, kOne, sp, q);
      const auto d = oracle::disequilibrium(s, kOne, sp, tight);
      CHECK(std::abs(c.value - d.value) <= c.error + d.error + 1e-15);
      const auto e = oracle::fisher(s, kOne, sp, q);
      const auto f = oracle::fisher(s, kOne, sp, tight);
      CHECK(std::abs(e.value - f.value) <= e.error + f.error + 1e-13);
    }
  }
}

TEST_CASE("measure set") {
  const auto m = oracle::measures(kGs, kOne, Space::Position);
  CHECK(m.provenance == Provenance::Oracle);
  CHECK(m.normalization.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(m.fisher.value == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(m.variance.value >= 0);
}
