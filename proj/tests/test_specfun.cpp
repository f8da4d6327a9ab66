#include "wpcoop/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"

using wpcoop::binomial;
using wpcoop::lambert_w0;
using wpcoop::regularized_lower_gamma;

TEST_CASE("regularized_lower_gamma: exponential special case") {
  CHECK(regularized_lower_gamma(1.0, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  for (double x : {0.01, 0.1, 1.0, 5.0, 20.0}) {
    CHECK(std::fabs(regularized_lower_gamma(1.0, x) + std::expm1(-x)) <= 1e-12);
  }
}

TEST_CASE("regularized_lower_gamma: empty integral") {
  CHECK(regularized_lower_gamma(1.6467, 0.0) == 0.0);
  CHECK(regularized_lower_gamma({1.6467, 0.0}) == 0.0);
}

TEST_CASE("regularized_lower_gamma: matches quadrature of the defining integral") {
  const double expected = oracle::lower_gamma_quadrature(1.6467, 2.0966);
  CHECK(std::fabs(regularized_lower_gamma(1.6467, 2.0966) / expected - 1.0) <= 1e-10);

  // Both branches of the series / continued fraction split.
  for (double a : {0.5, 1.6467, 3.0, 7.5}) {
    for (double x : {1e-3, 0.3, 1.0, a + 0.9, a + 1.1, 2.0 * a + 4.0}) {
      const double q = oracle::lower_gamma_quadrature(a, x);
      CAPTURE(a);
      CAPTURE(x);
      CHECK(std::fabs(regularized_lower_gamma(a, x) / q - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("regularized_lower_gamma: monotone in x") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> dist(0.0, 25.0);
  for (double a : {0.5, 1.6467, 3.0}) {
    for (int i = 0; i < 2000; ++i) {
      double x1 = dist(gen), x2 = dist(gen);
      if (x1 > x2) std::swap(x1, x2);
      CHECK(regularized_lower_gamma(a, x1) <= regularized_lower_gamma(a, x2));
    }
  }
}

TEST_CASE("regularized_lower_gamma: limits and log form") {
  CHECK(regularized_lower_gamma(1.6467, 1e4) == 1.0);
  CHECK(regularized_lower_gamma(1.6467, INFINITY) == 1.0);
  for (double x : {1e-30, 1e-8, 0.5, 2.0, 10.0}) {
    CHECK(std::exp(wpcoop::log_regularized_lower_gamma(1.6467, x)) ==
          doctest::Approx(regularized_lower_gamma(1.6467, x)).epsilon(1e-13));
  }
  // Below the double range of P itself, the log form stays finite.
  CHECK(std::isfinite(wpcoop::log_regularized_lower_gamma(1.6467, 1e-250)));
}

TEST_CASE("regularized_lower_gamma: domain errors") {
  CHECK_THROWS_AS(regularized_lower_gamma(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(regularized_lower_gamma(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(regularized_lower_gamma(1.0, -1e-9), std::domain_error);
  CHECK_THROWS_AS(regularized_lower_gamma(1.0, NAN), std::domain_error);
}

TEST_CASE("lambert_w0: fixed points") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lambert_w0(-1.0 / std::numbers::e) == -1.0);
  const double newton = oracle::lambert_newton(1.0);
  CHECK(newton == doctest::Approx(0.5671432904).epsilon(1e-10));
  CHECK(lambert_w0(1.0) == doctest::Approx(newton).epsilon(1e-14));
}

TEST_CASE("lambert_w0: round trip over log-spaced arguments") {
  double previous = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const double z = std::pow(10.0, -6.0 + 18.0 * i / 999.0);
    const double w = lambert_w0(z);
    CAPTURE(z);
    CHECK(std::fabs(w * std::exp(w) - z) <= 1e-10 * std::max(1.0, std::fabs(z)));
    CHECK(w > previous);
    previous = w;
  }
  for (double z : {-0.3678, -0.36, -0.3, -0.1, -1e-5}) {
    const double w = lambert_w0(z);
    CHECK(w >= -1.0);
    CHECK(std::fabs(w * std::exp(w) - z) <= 1e-12);
  }
}

TEST_CASE("lambert_w0: domain error below the branch point") {
  CHECK_THROWS_AS(lambert_w0(-0.37), std::domain_error);
  CHECK_THROWS_AS(lambert_w0(NAN), std::domain_error);
}

TEST_CASE("binomial: values and symmetry") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(7, 0) == 1);
  const auto pascal = oracle::pascal_triangle(60);
  CHECK(binomial(10, 5) == pascal[10][5]);
  CHECK(binomial(10, 5) == 252);
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n, n - k));
      CHECK(binomial(n, k) == pascal[n][k]);
    }
  }
  CHECK(binomial(60, 30) == pascal[60][30]);
  CHECK_THROWS_AS(binomial(3, 4), std::domain_error);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}
