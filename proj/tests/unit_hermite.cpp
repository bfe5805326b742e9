// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"
#include "qvt/hermite.hpp"
#include "qvt/quadrature.hpp"
#include "support/gauss_hermite.hpp"

using namespace qvt;
using constants::pi;

namespace {

// explicit physicists' Hermite polynomials as an independent oracle
double hermite_poly(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) return h0;
  double h = h1;
  for (int k = 1; k < n; ++k) {
    h = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h;
  }
  return h;
}

double chi_explicit(int n, double x) {
  double log_norm = 0.0;  // log(2^n n! sqrt(pi)) / 2
  for (int k = 1; k <= n; ++k) log_norm += std::log(2.0 * k);
  log_norm = 0.5 * (log_norm + 0.5 * std::log(pi));
  return hermite_poly(n, x) * std::exp(-0.5 * x * x - log_norm);
}

}  // namespace

TEST_CASE("ground state value at the origin") {
  CHECK(hermite_function(0, 0.0) ==
        doctest::Approx(0.75112554446494248).epsilon(1e-15));
  CHECK(hermite_function(1, 0.0) == 0.0);
  // (qB)^{1/4} prefactor
  CHECK(hermite_mode_value(16.0, 0, 0.0) ==
        doctest::Approx(2.0 * 0.75112554446494248).epsilon(1e-14));
}

TEST_CASE("recurrence matches explicit polynomials up to n = 12") {
  for (int n = 0; n <= 12; ++n) {
    for (double x : {-2.7, -0.9, 0.0, 0.31, 1.8, 4.4}) {
      CHECK(hermite_function(n, x) ==
            doctest::Approx(chi_explicit(n, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("values stay finite over the declared domain") {
  for (int n : {0, 1, 10, 100, 499, 500}) {
    for (double x = -30.0; x <= 30.0; x += 1.5) {
      const double v = hermite_function(n, x);
      CHECK(std::isfinite(v));
    }
  }
  CHECK_THROWS_AS((void)hermite_function(501, 0.0), Error);
  CHECK_THROWS_AS((void)hermite_function(-1, 0.0), Error);
}

TEST_CASE("unit norm via Gauss-Hermite quadrature") {
  const auto rule = qvt_test::gauss_hermite_rule(64);
  REQUIRE(rule.nodes.size() == 64);
  for (int n = 0; n <= 20; ++n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double chi = hermite_function(n, rule.nodes[i]);
      acc += rule.mu[i] * chi * chi;
    }
    CHECK(std::abs(acc - 1.0) < 1e-10);
  }
}

TEST_CASE("orthonormality via Gauss-Hermite quadrature") {
  const auto rule = qvt_test::gauss_hermite_rule(64);
  std::vector<double> col(22);
  double worst = 0.0;
  std::vector<std::vector<double>> values(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    hermite_function_all(21, rule.nodes[i], col);
    values[i].assign(col.begin(), col.end());
  }
  for (int n = 0; n <= 20; ++n) {
    for (int m = n; m <= 20; ++m) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.mu[i] * values[i][n] * values[i][m];
      }
      const double target = (n == m) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(acc - target));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("orthonormality cross-checked with adaptive quadrature") {
  const QuadratureResult q77 = integrate(
      [](double x) {
        const double v = hermite_function(7, x);
        return v * v;
      },
      -14.0, 14.0, 1e-13, 1e-13);
  CHECK(q77.value == doctest::Approx(1.0).epsilon(1e-12));
  const QuadratureResult q75 = integrate(
      [](double x) {
        return hermite_function(7, x) * hermite_function(5, x);
      },
      -14.0, 14.0, 1e-13, 1e-13);
  CHECK(std::abs(q75.value) < 1e-12);
}

TEST_CASE("derivative identity chi' = sqrt(2n) chi_{n-1} - x chi_n") {
  for (int n : {0, 1, 3, 11}) {
    for (double x : {-1.7, 0.2, 2.9}) {
      const double h = 1e-5;
      const double numeric =
          (hermite_function(n, x + h) - hermite_function(n, x - h)) /
          (2.0 * h);
      CHECK(hermite_function_derivative(n, x) ==
            doctest::Approx(numeric).epsilon(1e-8));
    }
  }
}

TEST_CASE("smeared completeness against a displaced unit Gaussian") {
  // A centered unit Gaussian is proportional to chi_0, which a one-term
  // sum already reproduces; displacing it by 1 makes every order
  // contribute.
  const double mu = 1.0;
  auto g = [mu](double x) { return std::exp(-0.5 * (x - mu) * (x - mu)); };

  auto sup_error = [&](int n_terms) {
    std::vector<double> chi_x(static_cast<std::size_t>(n_terms) + 1);
    std::vector<double> chi_y(static_cast<std::size_t>(n_terms) + 1);
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double x = -3.0 + 6.0 * i / 40.0;
      hermite_function_all(n_terms, x, chi_x);
      const QuadratureResult q = integrate(
          [&](double y) {
            hermite_function_all(n_terms, y, chi_y);
            double k = 0.0;
            for (int n = 0; n <= n_terms; ++n) k += chi_x[n] * chi_y[n];
            return k * g(y);
          },
          -9.0, 11.0, 1e-10, 1e-10, 8);
      worst = std::max(worst, std::abs(q.value - g(x)));
    }
    return worst;
  };

  const double e2 = sup_error(2);
  const double e8 = sup_error(8);
  const double e200 = sup_error(200);
  CHECK(e8 < e2);
  CHECK(e200 < e8);
  CHECK(e200 < 1e-3);
}
