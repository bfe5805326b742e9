// SPDX-License-Identifier: Apache-2.0
#include "qvt/pusher.hpp"

#include <cmath>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"

namespace qvt {

namespace {

double gamma_of_u(const Vec3& u) {
  return std::sqrt(1.0 + dot(u, u) / constants::c2);
}

}  // namespace

Trajectory push_particle(const FieldConfiguration& f, double q, double m,
                         const Vec3& x0, const Vec3& v0, double dt,
                         int steps) {
  using constants::c;
  using constants::pi;

  if (m <= 0.0) {
    throw Error(ErrorCode::out_of_domain, "push_particle: mass must be > 0");
  }
  if (norm(v0) >= c) {
    throw Error(ErrorCode::superluminal_initial_velocity,
                "push_particle: |v0| >= c");
  }
  const double b_mag = norm(f.B);
  if (b_mag > 0.0 && std::abs(q) > 0.0) {
    const double gyroperiod = 2.0 * pi * m / (std::abs(q) * b_mag);
    if (dt > 0.05 * gyroperiod) {
      throw Error(ErrorCode::timestep_too_large,
                  "push_particle: dt does not resolve the gyroperiod");
    }
  }

  Trajectory traj;
  traj.reserve(static_cast<std::size_t>(steps) + 1);

  const double g0 = 1.0 / std::sqrt(1.0 - dot(v0, v0) / constants::c2);
  Vec3 x = x0;
  Vec3 u = g0 * v0;  // proper velocity gamma*v
  traj.push_back({0.0, x, v0});

  const double qdt2m = 0.5 * q * dt / m;
  for (int k = 0; k < steps; ++k) {
    // half electric kick
    Vec3 u_minus = u + qdt2m * f.E;
    // magnetic rotation about B at the mid-step gamma
    const double g_mid = gamma_of_u(u_minus);
    const Vec3 t = (qdt2m / g_mid) * f.B;
    const Vec3 s = (2.0 / (1.0 + dot(t, t))) * t;
    const Vec3 u_prime = u_minus + cross(u_minus, t);
    const Vec3 u_plus = u_minus + cross(u_prime, s);
    // second half kick
    u = u_plus + qdt2m * f.E;

    const double g = gamma_of_u(u);
    const Vec3 v = u / g;
    x = x + dt * v;
    traj.push_back({(k + 1) * dt, x, v});
  }
  return traj;
}

Vec3 gyro_averaged_drift(const Trajectory& traj, double q, double m,
                         double b_mag) {
  using constants::pi;
  if (traj.size() < 3 || b_mag <= 0.0 || q == 0.0) {
    throw Error(ErrorCode::out_of_domain,
                "gyro_averaged_drift: need a trajectory in a field");
  }

  double gamma_sum = 0.0;
  for (const auto& s : traj) {
    gamma_sum += 1.0 / std::sqrt(1.0 - dot(s.v, s.v) / constants::c2);
  }
  const double gamma_mean = gamma_sum / static_cast<double>(traj.size());
  const double period = 2.0 * pi * gamma_mean * m / (std::abs(q) * b_mag);

  const double t_total = traj.back().t - traj.front().t;
  const int whole_periods = static_cast<int>(std::floor(t_total / period));
  if (whole_periods < 1) {
    throw Error(ErrorCode::out_of_domain,
                "gyro_averaged_drift: trajectory shorter than one gyroperiod");
  }
  const double t_window = whole_periods * period;

  // Linear interpolation of the position at t_window.
  const double dt = traj[1].t - traj[0].t;
  const double idx = t_window / dt;
  auto lo = static_cast<std::size_t>(idx);
  Vec3 x_end;
  if (lo + 1 >= traj.size()) {
    x_end = traj.back().x;
  } else {
    const double frac = idx - static_cast<double>(lo);
    x_end = traj[lo].x + frac * (traj[lo + 1].x - traj[lo].x);
  }
  return (x_end - traj.front().x) / t_window;
}

double relative_energy_drift(const Trajectory& traj) {
  if (traj.empty()) return 0.0;
  const double g0 =
      1.0 / std::sqrt(1.0 - dot(traj.front().v, traj.front().v) / constants::c2);
  double worst = 0.0;
  for (const auto& s : traj) {
    const double g = 1.0 / std::sqrt(1.0 - dot(s.v, s.v) / constants::c2);
    worst = std::max(worst, std::abs(g - g0) / g0);
  }
  return worst;
}

}  // namespace qvt
