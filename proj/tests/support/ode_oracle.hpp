// SPDX-License-Identifier: Apache-2.0
//
// Independent fixed-step RK4 continuation of w'' = p(s) w for complex w,
// used as the test oracle against the library's Taylor-series stepper.
#pragma once

#include <cmath>
#include <complex>
#include <functional>

namespace qvt_test {

using cplx = std::complex<double>;

struct OdeState {
  cplx w;
  cplx wp;
};

inline OdeState rk4_propagate(const std::function<cplx(double)>& p,
                              double s0, double s1, OdeState y, double h) {
  const double dist = s1 - s0;
  const int steps = std::max(1, (int)std::ceil(std::abs(dist) / h));
  const double dt = dist / steps;
  double s = s0;
  for (int i = 0; i < steps; ++i) {
    auto f = [&p](double t, const OdeState& u) {
      return OdeState{u.wp, p(t) * u.w};
    };
    const OdeState k1 = f(s, y);
    const OdeState k2 =
        f(s + 0.5 * dt, {y.w + 0.5 * dt * k1.w, y.wp + 0.5 * dt * k1.wp});
    const OdeState k3 =
        f(s + 0.5 * dt, {y.w + 0.5 * dt * k2.w, y.wp + 0.5 * dt * k2.wp});
    const OdeState k4 = f(s + dt, {y.w + dt * k3.w, y.wp + dt * k3.wp});
    y.w += dt / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w);
    y.wp += dt / 6.0 * (k1.wp + 2.0 * k2.wp + 2.0 * k3.wp + k4.wp);
    s += dt;
  }
  return y;
}

}  // namespace qvt_test
