// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qvt/vec3.hpp"

namespace qvt {

/// Uniform electric and magnetic fields, SI units (V/m and T).
struct FieldConfiguration {
  Vec3 E;
  Vec3 B;
};

/// The two Lorentz invariants of the field pair.
///   i1 = E.B            [V T / m]
///   i2 = E^2 - c^2 B^2  [V^2 / m^2]
struct FieldInvariants {
  double i1 = 0.0;
  double i2 = 0.0;
};

FieldInvariants invariants(const FieldConfiguration& f);

struct DriftResult {
  Vec3 v;                  // E x B / B^2 [m/s]
  bool exceeds_c = false;  // formula left its validity regime
};

/// E x B drift velocity.  Note there is no charge argument: the drift is
/// the same for either sign of charge.
/// Throws ErrorCode::zero_magnetic_field when |B| = 0.
DriftResult drift_velocity(const FieldConfiguration& f);

double lorentz_gamma(double u);

/// Boost the field pair to a frame moving at speed u along `axis`
/// (axis must be a unit vector).  Components parallel to the axis are
/// unchanged; transverse components mix as
///   E' = gamma (E_perp + u n x B),  B' = gamma (B_perp - (u/c^2) n x E).
FieldConfiguration boost_fields(const FieldConfiguration& f, double u,
                                const Vec3& axis);

struct BoostResult {
  double u = 0.0;      // signed speed along axis [m/s]
  double gamma = 1.0;  // 1/sqrt(1 - u^2/c^2)
  FieldConfiguration boosted;
  Vec3 axis;           // unit(E x B)
};

/// Find the frame in which E and B appear parallel.  The boost speed is
/// the subluminal root of (r/c^2) u^2 - u + r = 0 with
/// r = |E x B| / (B^2 + E^2/c^2), taken along unit(E x B).
/// Throws perpendicular_fields when |cos(E,B)| < 1e-10 (no such frame)
/// and degenerate_null_field when the discriminant is not positive.
BoostResult colinearizing_boost(const FieldConfiguration& f);

/// Residual of the defining boost-speed equation, relative:
/// |u/(1 + u^2/c^2) - r| / r.
double colinearizing_residual(const FieldConfiguration& f, double u);

}  // namespace qvt
