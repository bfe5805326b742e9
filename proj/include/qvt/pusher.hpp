// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qvt/em_fields.hpp"
#include "qvt/vec3.hpp"

namespace qvt {

struct ParticleState {
  double t = 0.0;  // [s]
  Vec3 x;          // [m]
  Vec3 v;          // [m/s]
};

using Trajectory = std::vector<ParticleState>;

/// Relativistic Boris push in uniform fields.  The rotation step is
/// volume preserving, so |gamma v| is conserved exactly when E = 0.
/// Requires dt <= 0.05 * 2*pi*m/(|q||B|) and |v0| < c.
Trajectory push_particle(const FieldConfiguration& f, double q, double m,
                         const Vec3& x0, const Vec3& v0, double dt,
                         int steps);

/// Mean drift velocity over the largest whole number of gyroperiods that
/// fits in the trajectory, from end-point displacement.  The period is
/// 2*pi*gamma_mean*m/(|q| b_mag).
Vec3 gyro_averaged_drift(const Trajectory& traj, double q, double m,
                         double b_mag);

/// max |gamma(t) - gamma(0)| / gamma(0) over the trajectory.
double relative_energy_drift(const Trajectory& traj);

}  // namespace qvt
