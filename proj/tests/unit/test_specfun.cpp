#include "doctest.h"

#include "hydrocx/error.hpp"
#include "hydrocx/specfun.hpp"

#include <cmath>
#include <numbers>

using namespace hydrocx;
namespace sf = hydrocx::specfun;

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;
}

TEST_CASE("log_gamma examples") {
  CHECK(sf::log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sf::log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  const double expected = std::log(10395.0 * std::sqrt(std::numbers::pi) / 64.0);
  CHECK(sf::log_gamma(6.5) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(sf::log_gamma(6.5) == doctest::Approx(5.6625).epsilon(1e-4));
}

TEST_CASE("digamma examples") {
  CHECK(std::abs(sf::digamma(1.0) + kEulerGamma) < 1e-12);
  CHECK(std::abs(sf::digamma(1.5) - (2.0 - kEulerGamma - 2.0 * std::log(2.0))) < 1e-12);
  CHECK(std::abs(sf::digamma(4.0) - (-kEulerGamma + 1.0 + 0.5 + 1.0 / 3.0)) < 1e-12);
}

TEST_CASE("non-positive arguments are domain errors") {
  CHECK_THROWS_AS(sf::log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(sf::log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(sf::digamma(0.0), DomainError);
  CHECK_THROWS_AS(sf::digamma(-2.0), DomainError);
  CHECK_THROWS_AS(sf::log_gamma(std::nan("")), DomainError);
}

TEST_CASE("recurrences on [0.25, 50]") {
  for (double x = 0.25; x <= 50.0; x += 0.0625) {
    CAPTURE(x);
    CHECK(std::abs(sf::log_gamma(x + 1) - sf::log_gamma(x) - std::log(x)) <= 1e-12);
    CHECK(std::abs(sf::digamma(x + 1) - sf::digamma(x) - 1.0 / x) <= 1e-12);
  }
}

TEST_CASE("half-integer gamma table") {
  // Γ(k + 1/2) = (2k-1)!! / 2^k √π, built from exact integers.
  long double odd_factorial = 1.0L;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) {
      odd_factorial *= 2 * k - 1;
    }
    const double exact =
        static_cast<double>(std::log(odd_factorial) - k * std::log(2.0L) +
                            0.5L * std::log(std::numbers::pi_v<long double>));
    CAPTURE(k);
    CHECK(sf::log_gamma(k + 0.5) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("gamma ratio and pochhammer") {
  CHECK(sf::log_gamma_ratio(5.0, 3.0) == doctest::Approx(std::log(12.0)).epsilon(1e-14));
  CHECK(sf::log_pochhammer(0.5, 3) == doctest::Approx(std::log(0.5 * 1.5 * 2.5)).epsilon(1e-14));
  CHECK(sf::log_pochhammer(2.0, 0) == doctest::Approx(0.0));
  // Large arguments must not overflow.
  CHECK(std::isfinite(sf::log_gamma_ratio(400.5, 2.0)));
}
