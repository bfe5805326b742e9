// SPDX-License-Identifier: Apache-2.0
#include "qvt/pcf.hpp"

#include <algorithm>
#include <cmath>

#include "qvt/cgamma.hpp"
#include "qvt/constants.hpp"
#include "qvt/error.hpp"

namespace qvt {

namespace {

using cplx = std::complex<double>;
using constants::pi;

constexpr double kLn2 = 0.69314718055994530942;
constexpr int kTaylorOrder = 30;
constexpr double kOdeTol = 1e-14;
constexpr double kLossThreshold = 1e-7;

void check_domain(cplx nu, cplx z) {
  if (std::abs(z) > pcf_max_abs_z || std::abs(nu.imag()) > pcf_max_im_nu ||
      std::abs(nu.real()) > pcf_max_re_nu || !std::isfinite(std::abs(z)) ||
      !std::isfinite(std::abs(nu))) {
    throw Error(ErrorCode::out_of_domain,
                "pcf_d: (nu, z) outside the declared domain");
  }
}

// Kummer M(a, b, x) together with dM/dx, by direct summation.
void kummer(cplx a, cplx b, cplx x, cplx& m, cplx& mp, double& cancellation) {
  cplx term = 1.0;   // t_k
  cplx dterm = 0.0;  // dt_k/dx
  cplx sum = term;
  cplx dsum = dterm;
  double peak = 1.0;
  for (int k = 0; k < 700; ++k) {
    const cplx ck = (a + double(k)) / ((b + double(k)) * double(k + 1));
    dterm = ck * (dterm * x + term);
    term *= ck * x;
    sum += term;
    dsum += dterm;
    peak = std::max(peak, std::abs(term));
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > std::abs(x)) break;
  }
  m = sum;
  mp = dsum;
  cancellation = peak / std::max(std::abs(sum), 1e-300);
}

struct SeriesParts {
  cplx value, deriv;
  double cancellation;
};

SeriesParts series_parts(cplx nu, cplx z) {
  const cplx x = 0.5 * z * z;
  cplx m1, m1p, m2, m2p;
  double c1, c2;
  kummer(-0.5 * nu, cplx(0.5), x, m1, m1p, c1);
  kummer(0.5 * (1.0 - nu), cplx(1.5), x, m2, m2p, c2);

  const cplx rg1 = reciprocal_gamma(0.5 * (1.0 - nu));
  const cplx rg2 = reciprocal_gamma(-0.5 * nu);
  const cplx pref = std::sqrt(pi) * std::exp(0.5 * nu * kLn2);
  const cplx gauss = std::exp(-0.25 * z * z);
  const double sqrt2 = std::sqrt(2.0);

  const cplx bracket = m1 * rg1 - sqrt2 * z * m2 * rg2;
  // d/dz of the bracket; dM/dz = M'(x) z
  const cplx dbracket = m1p * z * rg1 - sqrt2 * (m2 + z * z * m2p) * rg2;

  SeriesParts out;
  out.value = pref * gauss * bracket;
  out.deriv = pref * gauss * (dbracket - 0.5 * z * bracket);
  out.cancellation = std::max(c1, c2);
  return out;
}

// Asymptotic expansion D_nu(z) ~ e^{-z^2/4} z^nu sum_s (-1)^s (-nu)_{2s} /
// (s! (2 z^2)^s), summed to optimal truncation.  Returns the log of the
// value to stay in range.  Right half plane only (no connection formula).
struct AsymptoticLog {
  cplx log_value;
  double rel_err = 1.0;
  bool usable = false;
};

AsymptoticLog asymptotic_log(cplx nu, cplx z) {
  AsymptoticLog out;
  if (z.real() < 0.0 || std::abs(z) < 10.0) return out;
  cplx term = 1.0;
  cplx sum = 1.0;
  double smallest = 1.0;
  for (int s = 1; s < 60; ++s) {
    term *= -(-nu + double(2 * s - 2)) * (-nu + double(2 * s - 1)) /
            (2.0 * double(s) * z * z);
    const double mag = std::abs(term);
    if (mag >= smallest) break;  // divergence sets in
    sum += term;
    smallest = mag;
    if (mag < 1e-16 * std::abs(sum)) break;
  }
  out.rel_err = smallest / std::max(std::abs(sum), 1e-300);
  out.usable = out.rel_err < 1e-9;
  out.log_value = -0.25 * z * z + nu * std::log(z) + std::log(sum);
  return out;
}

}  // namespace

std::complex<double> pcf_d_at_zero(std::complex<double> nu) {
  return std::sqrt(pi) * std::exp(0.5 * nu * kLn2) *
         reciprocal_gamma(0.5 * (1.0 - nu));
}

std::complex<double> pcf_d_derivative_at_zero(std::complex<double> nu) {
  return -std::sqrt(2.0 * pi) * std::exp(0.5 * nu * kLn2) *
         reciprocal_gamma(-0.5 * nu);
}

namespace detail {

double PropagationLog::contamination() const {
  const double log_est =
      std::log(std::max(weighted, 1e-300)) + 2.0 * growth;
  if (log_est >= 0.0) return 1.0;
  return std::exp(log_est);
}

PropagationLog weber_propagate(cplx c2, cplx c1, cplx c0, double s0,
                               double s1, cplx& w, cplx& wp,
                               double& log_scale, double tol) {
  double s = s0;
  const double dir = (s1 >= s0) ? 1.0 : -1.0;
  PropagationLog log;
  log.weighted = 1e-16;  // rounding of the seed values
  cplx a[kTaylorOrder + 1];

  int guard = 0;
  while (dir * (s1 - s) > 0.0) {
    if (++guard > 200000) {
      throw Error(ErrorCode::out_of_domain,
                  "weber_propagate: step count exceeded");
    }
    // local Taylor coefficients around s
    const cplx p0 = (c2 * s + c1) * s + c0;
    const cplx p1 = 2.0 * c2 * s + c1;
    const cplx p2 = c2;
    a[0] = w;
    a[1] = wp;
    for (int k = 0; k + 2 <= kTaylorOrder; ++k) {
      cplx acc = p0 * a[k];
      if (k >= 1) acc += p1 * a[k - 1];
      if (k >= 2) acc += p2 * a[k - 2];
      a[k + 2] = acc / double((k + 1) * (k + 2));
    }

    const double omega = std::sqrt(std::abs(p0)) + 1.0;
    double scale = std::max(std::abs(a[0]), std::abs(a[1]) / omega);
    if (scale == 0.0) scale = 1.0;

    // step size: keep the two highest retained terms below tol * scale
    // and the peak of the coefficient envelope below order kTaylorOrder/2
    double h = std::min(std::abs(s1 - s), 0.5 * kTaylorOrder / omega);
    for (int k = kTaylorOrder; k >= kTaylorOrder - 1; --k) {
      const double ak = std::abs(a[k]);
      if (ak > 0.0) {
        h = std::min(h, std::pow(0.25 * tol * scale / ak, 1.0 / double(k)));
      }
    }
    h = std::max(h, 1e-6 / omega);
    h = std::min(h, std::abs(s1 - s));
    const double u = dir * h;

    // Horner for w and w'
    cplx val = a[kTaylorOrder];
    cplx der = double(kTaylorOrder) * a[kTaylorOrder];
    for (int k = kTaylorOrder - 1; k >= 1; --k) {
      val = val * u + a[k];
      der = der * u + double(k) * a[k];
    }
    val = val * u + a[0];

    const double tail = (std::abs(a[kTaylorOrder]) * h +
                         std::abs(a[kTaylorOrder - 1])) *
                        std::pow(h, kTaylorOrder - 1);
    const double local = tail / scale;
    log.truncation += local;
    log.weighted += local * std::exp(-std::min(2.0 * log.growth, 700.0));
    log.growth += std::abs(std::sqrt(p0).real()) * h;

    w = val;
    wp = der;
    s += u;

    // keep the pair inside double range
    const double mag = std::max(std::abs(w), std::abs(wp) / omega);
    if (mag > 1e120 || (mag > 0.0 && mag < 1e-120)) {
      const double f = 1.0 / mag;
      w *= f;
      wp *= f;
      log_scale -= std::log(f);
    }
  }
  return log;
}

PcfResult pcf_d_series(cplx nu, cplx z) {
  const SeriesParts p = series_parts(nu, z);
  PcfResult out;
  out.value = p.value;
  out.derivative = p.deriv;
  out.est_rel_error = 1e-16 * p.cancellation + 1e-15;
  out.loss_of_precision = out.est_rel_error > kLossThreshold;
  return out;
}

PcfResult pcf_d_ode(cplx nu, cplx z) {
  PcfResult out;
  const double r = std::abs(z);
  if (r == 0.0) {
    out.value = pcf_d_at_zero(nu);
    out.derivative = pcf_d_derivative_at_zero(nu);
    out.est_rel_error = 1e-15;
    return out;
  }
  const cplx dir = z / r;  // e^{i theta}
  // w(s) = D_nu(s e^{i theta}) solves w'' = (c2 s^2 + c0) w
  const cplx c2 = 0.25 * dir * dir * dir * dir;
  const cplx c0 = -dir * dir * (nu + 0.5);

  // log-domain seed keeps large |Im nu| representable
  const cplx log_d0 = 0.5 * std::log(pi) + 0.5 * nu * kLn2 -
                      log_gamma(0.5 * (1.0 - nu));
  const cplx log_d0p = 0.5 * std::log(2.0 * pi) + 0.5 * nu * kLn2 -
                       log_gamma(-0.5 * nu) + cplx(0.0, pi);
  const double ref = std::max(log_d0.real(), log_d0p.real());
  cplx w = std::exp(log_d0 - ref);
  cplx wp = dir * std::exp(log_d0p - ref);
  double log_scale = ref;

  const PropagationLog log =
      weber_propagate(c2, 0.0, c0, 0.0, r, w, wp, log_scale, kOdeTol);

  out.value = w;
  out.derivative = wp / dir;
  out.log_scale = log_scale;
  out.est_rel_error = log.contamination() + 1e-15;

  // fold the scale back in when it fits
  if (std::abs(log_scale) < 600.0) {
    const double f = std::exp(log_scale);
    if (std::isfinite(f * std::abs(out.value)) &&
        std::isfinite(f * std::abs(out.derivative))) {
      out.value *= f;
      out.derivative *= f;
      out.log_scale = 0.0;
    }
  }

  // asymptotic cross-check where the expansion converges
  const AsymptoticLog as = asymptotic_log(nu, z);
  if (as.usable && std::abs(out.value) > 0.0) {
    const cplx log_ode = std::log(out.value) + out.log_scale;
    const double diff = std::abs(std::exp(as.log_value - log_ode) - 1.0);
    out.est_rel_error = std::max(out.est_rel_error, std::min(diff, 1.0));
  }
  out.loss_of_precision = out.est_rel_error > kLossThreshold;
  return out;
}

}  // namespace detail

PcfResult pcf_d(std::complex<double> nu, std::complex<double> z) {
  check_domain(nu, z);
  const double r = std::abs(z);
  const double nu_size = std::abs(nu + 0.5);
  const bool series_ok = r <= pcf_series_radius &&
                         nu_size * r * r <= 196.0 &&
                         std::abs(nu.imag()) <= 800.0;
  if (series_ok) return detail::pcf_d_series(nu, z);
  return detail::pcf_d_ode(nu, z);
}

}  // namespace qvt
