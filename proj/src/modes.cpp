// SPDX-License-Identifier: Apache-2.0
#include "qvt/modes.hpp"

#include <cmath>

#include "qvt/cgamma.hpp"
#include "qvt/constants.hpp"
#include "qvt/error.hpp"
#include "qvt/pcf.hpp"

namespace qvt {

namespace {

using cplx = std::complex<double>;
using constants::pi;

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kOdeTol = 1e-14;

// Seeds of the normalized temporal mode and its tau-derivative at tau = 0,
// combined in the log domain so that deep-Landau contexts (very negative
// a) never leave double range:
//   phi(0)  = sqrt(2) e^{pi a/4} e^{i(pi/2 + delta/2)} D_nu(0)
//   phi'(0) = same prefactor * e^{-i pi/4} D'_nu(0)
void phi_seed(const ModeContext& ctx, bool conjugated, cplx& w, cplx& wp) {
  const double a = ctx.a();
  const cplx nu(-0.5, -a);  // -i a - 1/2
  const cplx log_pref = 0.5 * kLn2 + pi * a / 4.0 +
                        cplx(0.0, 0.5 * pi + 0.5 * ctx.delta());
  const cplx log_d0 =
      0.5 * std::log(pi) + 0.5 * nu * kLn2 - log_gamma(0.5 * (1.0 - nu));
  const cplx log_d0p = 0.5 * std::log(2.0 * pi) + 0.5 * nu * kLn2 -
                       log_gamma(-0.5 * nu) + cplx(0.0, pi);

  w = std::exp(log_pref + log_d0);
  wp = std::exp(log_pref + log_d0p + cplx(0.0, -0.25 * pi));
  if (conjugated) {
    w = std::conj(w);
    wp = std::conj(wp);
  }
}

ModeValue propagate_phi(const ModeContext& ctx, bool conjugated,
                        double tau) {
  if (std::abs(tau) > max_abs_tau || !std::isfinite(tau)) {
    throw Error(ErrorCode::out_of_domain,
                "phi_mode: |tau| exceeds the supported domain (50)");
  }
  ModeValue out;
  cplx w, wp;
  phi_seed(ctx, conjugated, w, wp);
  double log_scale = 0.0;
  // phi'' = -(tau^2/4 - a) phi: purely oscillatory, no growth direction
  const detail::PropagationLog log = detail::weber_propagate(
      cplx(-0.25), cplx(0.0), cplx(ctx.a()), 0.0, tau, w, wp, log_scale,
      kOdeTol);
  // |phi| stays O(1); the rescaling never engages
  out.value = w * std::exp(log_scale);
  out.derivative = wp * std::exp(log_scale);
  out.est_rel_error = log.contamination() + 1e-15;
  return out;
}

double stencil_residual(const double v[5], double potential_plus, double h,
                        double scale_floor) {
  // f'' ~ (-f[-2] + 16 f[-1] - 30 f[0] + 16 f[1] - f[2]) / (12 h^2)
  const double second =
      (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) /
      (12.0 * h * h);
  double peak = 0.0;
  for (int i = 0; i < 5; ++i) peak = std::max(peak, std::abs(v[i]));
  const double denom =
      (std::abs(potential_plus) + scale_floor) * std::max(peak, 1e-300);
  return std::abs(second + potential_plus * v[2]) / denom;
}

}  // namespace

ModeContext::ModeContext(double qE, double qB, double m, int n, double kx,
                         double ky)
    : qE_(qE), qB_(qB), m_(m), n_(n), kx_(kx), ky_(ky) {
  if (!(qE > 0.0) || !(qB > 0.0) || !(m >= 0.0) || n < 0 ||
      n > max_landau_index || !std::isfinite(kx) || !std::isfinite(ky)) {
    throw Error(ErrorCode::out_of_domain,
                "ModeContext: need qE > 0, qB > 0, m >= 0, 0 <= n <= 500");
  }
  beta_ = (2.0 * n + 1.0) * qB;
  a_ = -(m * m + beta_) / (2.0 * qE);
  delta_ = arg_gamma(cplx(0.5, a_));
}

double xi_of(const ModeContext& ctx, double z) {
  return std::sqrt(1.0 / ctx.qB()) * (ctx.kx() + ctx.qB() * z);
}

double tau_of(const ModeContext& ctx, double t) {
  return std::sqrt(2.0 / ctx.qE()) * (ctx.ky() + ctx.qE() * t);
}

double hermite_mode(const ModeContext& ctx, double xi) {
  return hermite_mode_value(ctx.qB(), ctx.n(), xi);
}

ModeValue phi_mode(const ModeContext& ctx, double tau) {
  return propagate_phi(ctx, false, tau);
}

ModeValue phi_mode_conj(const ModeContext& ctx, double tau) {
  return propagate_phi(ctx, true, tau);
}

double field_normalization(const ModeContext& ctx) {
  return 1.0 / (std::sqrt(2.0) * std::pow(2.0 * ctx.qE(), 0.25));
}

std::complex<double> wronskian(const ModeContext& ctx, double tau) {
  const ModeValue p = phi_mode(ctx, tau);
  const ModeValue q = phi_mode_conj(ctx, tau);
  return p.value * q.derivative - q.value * p.derivative;
}

double residual_kg_time(const ModeContext& ctx, double t, double h) {
  // phi'' + [(ky + qE t)^2 + m^2 + beta] phi = 0 in t
  double re[5], im[5];
  for (int i = -2; i <= 2; ++i) {
    const ModeValue v = phi_mode(ctx, tau_of(ctx, t + i * h));
    re[i + 2] = v.value.real();
    im[i + 2] = v.value.imag();
  }
  const double kt = ctx.ky() + ctx.qE() * t;
  const double potential = kt * kt + ctx.m() * ctx.m() + ctx.beta();
  const double rr = stencil_residual(re, potential, h, 2.0 * ctx.qE());
  const double ri = stencil_residual(im, potential, h, 2.0 * ctx.qE());
  return std::max(rr, ri);
}

double residual_kg_space(const ModeContext& ctx, double z, double h) {
  // chi'' - [(kx + qB z)^2 - beta] chi = 0 in z
  double v[5];
  for (int i = -2; i <= 2; ++i) {
    v[i + 2] = hermite_mode(ctx, xi_of(ctx, z + i * h));
  }
  const double kz = ctx.kx() + ctx.qB() * z;
  const double potential = -(kz * kz - ctx.beta());
  return stencil_residual(v, potential, h, ctx.qB());
}

double residual_kg(const ModeContext& ctx, double t, double z) {
  const double h = 0.01;
  return std::max(residual_kg_time(ctx, t, h), residual_kg_space(ctx, z, h));
}

}  // namespace qvt
