// SPDX-License-Identifier: Apache-2.0
#include "qvt/propulsion.hpp"

#include <cmath>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"

namespace qvt {

namespace {

void check_speed(double v) {
  if (!(v >= 0.0) || v >= constants::c) {
    throw Error(ErrorCode::exhaust_at_light_speed,
                "propulsion: exhaust speed must satisfy 0 <= v < c");
  }
}

}  // namespace

PowerBreakdown pair_thruster_power(const ThrusterPoint& p) {
  using constants::c2;
  check_speed(p.v);
  if (p.mdot < 0.0) {
    throw Error(ErrorCode::out_of_domain, "propulsion: mdot must be >= 0");
  }
  PowerBreakdown out;
  const double beta2 = p.v * p.v / c2;
  out.exact = 2.0 * p.mdot * c2 / std::sqrt(1.0 - beta2);
  out.approx = 2.0 * p.mdot * c2 + p.mdot * p.v * p.v;
  out.rel_difference =
      out.exact > 0.0 ? (out.exact - out.approx) / out.exact : 0.0;
  return out;
}

double thrust(const ThrusterPoint& p) { return 2.0 * p.mdot * p.v; }

double pair_thruster_f_over_p(double v) {
  check_speed(v);
  return 2.0 * v / (2.0 * constants::c2 + v * v);
}

double photon_thruster_f_over_p() { return 1.0 / constants::c; }

}  // namespace qvt
