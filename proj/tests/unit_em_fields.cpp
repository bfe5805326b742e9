// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qvt/constants.hpp"
#include "qvt/em_fields.hpp"
#include "qvt/error.hpp"

using namespace qvt;
using constants::c;
using constants::c2;

namespace {

FieldConfiguration random_config(std::mt19937& rng, double min_cos) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> e_exp(0.0, 5.0);
  std::uniform_real_distribution<double> b_exp(-3.0, 1.0);
  while (true) {
    FieldConfiguration f;
    f.E = std::pow(10.0, e_exp(rng)) * Vec3{unit(rng), unit(rng), unit(rng)};
    f.B = std::pow(10.0, b_exp(rng)) * Vec3{unit(rng), unit(rng), unit(rng)};
    const double en = norm(f.E), bn = norm(f.B);
    if (en == 0.0 || bn == 0.0) continue;
    if (std::abs(dot(f.E, f.B)) / (en * bn) > min_cos) return f;
  }
}

// Invariant drift normalized per frame.  An independent random boost can
// make |E'| ~ gamma u |B| dwarf |E|, and E'.B' only carries E.B relative
// to the products actually formed, so the scale spans both frames.  (The
// colinearizing boost has u ~ E/B and no such amplification; the tests
// for it normalize by the input frame alone.)
double inv_error(const FieldConfiguration& f, const FieldConfiguration& g) {
  const FieldInvariants a = invariants(f);
  const FieldInvariants b = invariants(g);
  const double s1 = std::max({std::abs(a.i1), norm(f.E) * norm(f.B),
                              norm(g.E) * norm(g.B)});
  const double s2 =
      std::max({std::abs(a.i2), dot(f.E, f.E) + c2 * dot(f.B, f.B),
                dot(g.E, g.E) + c2 * dot(g.B, g.B)});
  return std::max(std::abs(b.i1 - a.i1) / s1, std::abs(b.i2 - a.i2) / s2);
}

}  // namespace

TEST_CASE("drift velocity of unit crossed fields") {
  FieldConfiguration f{{0, 1, 0}, {0, 0, 1}};
  const DriftResult d = drift_velocity(f);
  CHECK(d.v.x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.v.y == doctest::Approx(0.0));
  CHECK(d.v.z == doctest::Approx(0.0));
  CHECK_FALSE(d.exceeds_c);
}

TEST_CASE("drift velocity direct arithmetic") {
  FieldConfiguration f{{0, 2, 0}, {0, 0, 4}};
  const DriftResult d = drift_velocity(f);
  CHECK(d.v.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.v.y == 0.0);
  CHECK(d.v.z == 0.0);
}

TEST_CASE("drift of parallel fields vanishes") {
  FieldConfiguration f{{0, 0, 3.5}, {0, 0, 1.25}};
  const DriftResult d = drift_velocity(f);
  CHECK(norm(d.v) == 0.0);
}

TEST_CASE("drift errors and flags") {
  CHECK_THROWS_AS((void)drift_velocity({{0, 1, 0}, {0, 0, 0}}), Error);
  // E/B > c: formula leaves its regime and says so
  FieldConfiguration f{{0, 1e9, 0}, {0, 0, 1e-3}};
  CHECK(drift_velocity(f).exceeds_c);
}

TEST_CASE("drift perpendicularity for random configurations") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const FieldConfiguration f = random_config(rng, -0.1);
    const DriftResult d = drift_velocity(f);
    const double vn = norm(d.v);
    if (vn == 0.0) continue;
    CHECK(std::abs(dot(d.v, f.E)) / (vn * norm(f.E) + 1e-300) < 1e-14);
    CHECK(std::abs(dot(d.v, f.B)) / (vn * norm(f.B) + 1e-300) < 1e-14);
  }
}

TEST_CASE("pure electric field boost matches the closed form") {
  FieldConfiguration f{{0, 1, 0}, {0, 0, 0}};
  const double u = 0.6 * c;
  const double g = lorentz_gamma(u);
  const FieldConfiguration out = boost_fields(f, u, {1, 0, 0});
  CHECK(out.E.y == doctest::Approx(g).epsilon(1e-14));
  CHECK(out.B.z == doctest::Approx(-g * u / c2).epsilon(1e-14));
  CHECK(out.E.x == 0.0);
  CHECK(out.B.x == 0.0);
}

TEST_CASE("identity boost") {
  FieldConfiguration f{{3, -2, 5}, {0.1, 0.4, -0.2}};
  const FieldConfiguration out = boost_fields(f, 0.0, {0, 0, 1});
  CHECK(norm(out.E - f.E) == 0.0);
  CHECK(norm(out.B - f.B) == 0.0);
}

TEST_CASE("boost then inverse boost is the identity") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> speed(-0.99 * c, 0.99 * c);
  for (int i = 0; i < 100; ++i) {
    const FieldConfiguration f = random_config(rng, -0.1);
    const double u = speed(rng);
    const Vec3 axis = normalized({1.0, 2.0, -0.5});
    const FieldConfiguration back =
        boost_fields(boost_fields(f, u, axis), -u, axis);
    const double scale = std::max(norm(f.E), c * norm(f.B));
    CHECK(norm(back.E - f.E) / scale < 1e-12);
    CHECK(c * norm(back.B - f.B) / scale < 1e-12);
  }
}

TEST_CASE("boosts preserve both Lorentz invariants") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> speed(-0.999 * c, 0.999 * c);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const FieldConfiguration f = random_config(rng, -0.1);
    const Vec3 axis = normalized({unit(rng), unit(rng), unit(rng)});
    const FieldConfiguration g = boost_fields(f, speed(rng), axis);
    CHECK(inv_error(f, g) < 1e-12);
  }
}

TEST_CASE("superluminal boost is rejected") {
  FieldConfiguration f{{0, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS((void)boost_fields(f, c, {1, 0, 0}), Error);
}

TEST_CASE("colinearizing boost: parallel fields need no boost") {
  FieldConfiguration f{{0, 0, 2}, {0, 0, 5}};
  const BoostResult r = colinearizing_boost(f);
  CHECK(r.u == 0.0);
  CHECK(r.gamma == 1.0);
  CHECK(norm(r.boosted.E - f.E) == 0.0);
}

TEST_CASE("colinearizing boost of the slightly tilted configuration") {
  // E = (0,1,1) V/m, B = (0,0,1) T: r = 1/(1 + 2/c^2), u ~ 1 m/s along x
  FieldConfiguration f{{0, 1, 1}, {0, 0, 1}};
  const BoostResult r = colinearizing_boost(f);
  CHECK(r.u == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.axis.x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(colinearizing_residual(f, r.u) < 1e-12);
  const double cn = norm(cross(r.boosted.E, r.boosted.B)) /
                    (norm(r.boosted.E) * norm(r.boosted.B));
  CHECK(cn < 1e-10);
}

TEST_CASE("colinearizing boost: perpendicular fields are rejected") {
  FieldConfiguration f{{0, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS((void)colinearizing_boost(f), Error);
  try {
    (void)colinearizing_boost(f);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::perpendicular_fields);
  }
}

TEST_CASE("colinearization property over random configurations") {
  std::mt19937 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const FieldConfiguration f = random_config(rng, 0.01);
    const BoostResult r = colinearizing_boost(f);
    CHECK(std::abs(r.u) < c);
    CHECK(r.gamma == doctest::Approx(lorentz_gamma(r.u)).epsilon(1e-14));
    const double cn = norm(cross(r.boosted.E, r.boosted.B)) /
                      (norm(r.boosted.E) * norm(r.boosted.B));
    CHECK(cn < 1e-10);
    CHECK(inv_error(f, r.boosted) < 1e-12);
    CHECK(colinearizing_residual(f, r.u) < 1e-12);
  }
}
