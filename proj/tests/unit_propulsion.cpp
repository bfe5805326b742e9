// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"
#include "qvt/propulsion.hpp"

using namespace qvt;
using constants::c;
using constants::c2;

TEST_CASE("zero mass flow needs zero power") {
  const PowerBreakdown p = pair_thruster_power({0.0, 0.5 * c});
  CHECK(p.exact == 0.0);
  CHECK(p.approx == 0.0);
  CHECK(p.rel_difference == 0.0);
}

TEST_CASE("rest-mass power at v = 0") {
  const PowerBreakdown p = pair_thruster_power({1e-9, 0.0});
  CHECK(p.exact == doctest::Approx(1.7975103574736353e8).epsilon(1e-14));
  CHECK(p.exact == p.approx);
}

TEST_CASE("exact and approximate power at v = 0.01c") {
  const PowerBreakdown p = pair_thruster_power({1.0, 0.01 * c});
  CHECK(std::abs(p.rel_difference) < 5e-5);
  // Taylor remainder ~ (3/8) beta^4, frozen by direct evaluation
  CHECK(p.rel_difference == doctest::Approx(3.750125007e-9).epsilon(1e-3));
}

TEST_CASE("pair thrust-to-power values") {
  CHECK(pair_thruster_f_over_p(0.0) == 0.0);
  CHECK(pair_thruster_f_over_p(0.01 * c) ==
        doctest::Approx(3.3354741782726069e-11).epsilon(1e-14));
}

TEST_CASE("photon thrust-to-power is 1/c") {
  CHECK(photon_thruster_f_over_p() ==
        doctest::Approx(3.3356409519815204e-9).epsilon(1e-15));
}

TEST_CASE("ratio of ratios at v = 0.01c is 100.005") {
  const double ratio =
      photon_thruster_f_over_p() / pair_thruster_f_over_p(0.01 * c);
  CHECK(ratio == doctest::Approx(100.005).epsilon(1e-12));
  CHECK(std::abs(ratio - 100.0) <= 0.01);
}

TEST_CASE("pair thrust-to-power approaches 2/(3c) at the light-speed end") {
  const double v = c * (1.0 - 1e-12);
  CHECK(pair_thruster_f_over_p(v) ==
        doctest::Approx(2.0 / (3.0 * c)).epsilon(1e-11));
  CHECK(pair_thruster_f_over_p(v) < photon_thruster_f_over_p());
}

TEST_CASE("photon thruster dominates everywhere in (0, c)") {
  const double photon = photon_thruster_f_over_p();
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> lin(1e-6, 1.0 - 1e-12);
  for (int i = 0; i < 20000; ++i) {
    const double v = lin(rng) * c;
    CHECK(photon > pair_thruster_f_over_p(v));
  }
  // log-spaced sweep down to crawling speeds
  for (double v = 1e-6; v < c; v *= 1.7) {
    CHECK(photon > pair_thruster_f_over_p(v));
  }
}

TEST_CASE("pair thrust-to-power is increasing on the physical range") {
  double prev = -1.0;
  for (double frac = 0.001; frac < 1.0; frac += 0.001) {
    const double fp = pair_thruster_f_over_p(frac * c);
    CHECK(fp > prev);
    prev = fp;
  }
}

TEST_CASE("F/P from approximate power matches the closed ratio") {
  // F / P_approx = 2 mdot v / (2 mdot c^2 + mdot v^2) = pair F/P exactly
  for (double frac : {0.001, 0.01, 0.1, 0.5}) {
    const ThrusterPoint p{3.7e-6, frac * c};
    const PowerBreakdown power = pair_thruster_power(p);
    const double from_power = thrust(p) / power.approx;
    CHECK(from_power ==
          doctest::Approx(pair_thruster_f_over_p(p.v)).epsilon(1e-14));
    // against the exact relativistic power the two differ by the Taylor
    // remainder only
    const double rel = std::abs(thrust(p) / power.exact - from_power) /
                       from_power;
    CHECK(rel < std::pow(frac, 4.0) + 1e-12);
  }
}

TEST_CASE("light-speed exhaust is rejected") {
  CHECK_THROWS_AS((void)pair_thruster_f_over_p(c), Error);
  CHECK_THROWS_AS((void)pair_thruster_power({1.0, c}), Error);
  CHECK_THROWS_AS((void)pair_thruster_f_over_p(-1.0), Error);
}
