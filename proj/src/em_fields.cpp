// SPDX-License-Identifier: Apache-2.0
#include "qvt/em_fields.hpp"

#include <cmath>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"

namespace qvt {

namespace {
constexpr double kPerpendicularCosine = 1e-10;
}

FieldInvariants invariants(const FieldConfiguration& f) {
  return {dot(f.E, f.B), dot(f.E, f.E) - constants::c2 * dot(f.B, f.B)};
}

DriftResult drift_velocity(const FieldConfiguration& f) {
  const double b2 = dot(f.B, f.B);
  if (b2 == 0.0) {
    throw Error(ErrorCode::zero_magnetic_field,
                "drift_velocity: |B| = 0 has no drift frame");
  }
  DriftResult r;
  r.v = cross(f.E, f.B) / b2;
  r.exceeds_c = norm(r.v) >= constants::c;
  return r;
}

double lorentz_gamma(double u) {
  return 1.0 / std::sqrt((1.0 - u / constants::c) * (1.0 + u / constants::c));
}

FieldConfiguration boost_fields(const FieldConfiguration& f, double u,
                                const Vec3& axis) {
  using constants::c;
  using constants::c2;
  if (std::abs(u) >= c) {
    throw Error(ErrorCode::superluminal_boost,
                "boost_fields: |u| >= c");
  }
  const double axis_norm = norm(axis);
  if (axis_norm == 0.0 || !std::isfinite(axis_norm)) {
    throw Error(ErrorCode::superluminal_boost,
                "boost_fields: axis must be a nonzero unit vector");
  }
  const Vec3 n = axis / axis_norm;
  const double g = lorentz_gamma(u);

  const Vec3 e_par = dot(f.E, n) * n;
  const Vec3 b_par = dot(f.B, n) * n;
  // n x B and n x E are already transverse to n.
  const Vec3 e_perp = f.E - e_par;
  const Vec3 b_perp = f.B - b_par;

  FieldConfiguration out;
  out.E = e_par + g * (e_perp + u * cross(n, f.B));
  out.B = b_par + g * (b_perp - (u / c2) * cross(n, f.E));
  return out;
}

BoostResult colinearizing_boost(const FieldConfiguration& f) {
  using constants::c;
  using constants::c2;

  BoostResult result;
  const Vec3 exb = cross(f.E, f.B);
  const double exb_norm = norm(exb);
  const double e_norm = norm(f.E);
  const double b_norm = norm(f.B);

  if (exb_norm == 0.0) {
    // Already colinear (or one field vanishes): identity boost.
    result.axis = {1.0, 0.0, 0.0};
    result.boosted = f;
    return result;
  }

  const double cos_theta = dot(f.E, f.B) / (e_norm * b_norm);
  if (std::abs(cos_theta) < kPerpendicularCosine) {
    throw Error(ErrorCode::perpendicular_fields,
                "colinearizing_boost: E.B = 0, no parallel frame exists");
  }

  const double r = exb_norm / (dot(f.B, f.B) + dot(f.E, f.E) / c2);
  const double disc = 1.0 - 4.0 * r * r / c2;
  if (disc <= 0.0) {
    throw Error(ErrorCode::degenerate_null_field,
                "colinearizing_boost: degenerate (null-like) field pair");
  }
  // Subluminal root of (r/c^2) u^2 - u + r = 0, in the form that is
  // stable for r << c.
  result.u = 2.0 * r / (1.0 + std::sqrt(disc));
  result.gamma = lorentz_gamma(result.u);
  result.axis = exb / exb_norm;
  result.boosted = boost_fields(f, result.u, result.axis);
  return result;
}

double colinearizing_residual(const FieldConfiguration& f, double u) {
  using constants::c2;
  const double r =
      norm(cross(f.E, f.B)) / (dot(f.B, f.B) + dot(f.E, f.E) / c2);
  if (r == 0.0) return std::abs(u);
  return std::abs(u / (1.0 + u * u / c2) - r) / r;
}

}  // namespace qvt
