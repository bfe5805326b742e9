// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qvt {

/// Operating point of an ideal pair-production thruster.
struct ThrusterPoint {
  double mdot = 0.0;  // mass production rate per species [kg/s]
  double v = 0.0;     // exhaust speed [m/s], 0 <= v < c
};

struct PowerBreakdown {
  double exact = 0.0;    // 2 mdot c^2 / sqrt(1 - v^2/c^2) [W]
  double approx = 0.0;   // 2 mdot c^2 + mdot v^2 [W]
  double rel_difference = 0.0;  // (exact - approx) / exact, 0 when both 0
};

/// Minimum input power to create the pair flow and accelerate it to v.
PowerBreakdown pair_thruster_power(const ThrusterPoint& p);

/// Thrust F = 2 mdot v.
double thrust(const ThrusterPoint& p);

/// Thrust-to-power of the ideal pair-production thruster: 2v/(2c^2 + v^2).
double pair_thruster_f_over_p(double v);

/// Thrust-to-power of an ideal photon thruster: 1/c.
double photon_thruster_f_over_p();

}  // namespace qvt
