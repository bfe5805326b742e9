// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace qvt {

// Declared evaluation domain.
inline constexpr double pcf_max_abs_z = 60.0;
inline constexpr double pcf_max_im_nu = 1.0e4;
inline constexpr double pcf_max_re_nu = 100.0;
// Crossover radius between the convergent-series and ODE regimes.
inline constexpr double pcf_series_radius = 4.0;

struct PcfResult {
  std::complex<double> value;
  std::complex<double> derivative;  // d/dz
  // true value = value * exp(log_scale); nonzero only when the result
  // leaves the double range (large |Im nu|).
  double log_scale = 0.0;
  double est_rel_error = 0.0;
  bool loss_of_precision = false;  // est_rel_error > 1e-7
};

/// Weber parabolic cylinder function D_nu(z) for complex order and
/// argument.  Small |z| uses the confluent-hypergeometric series; larger
/// |z| continues the Weber ODE along the ray arg(z) = const with an
/// adaptive Taylor-series stepper seeded by the exact values at z = 0.
/// For |z| >= 20 in the right half plane the asymptotic expansion is used
/// as a cross-check and feeds the error estimate.
/// Throws ErrorCode::out_of_domain outside the declared domain.
PcfResult pcf_d(std::complex<double> nu, std::complex<double> z);

/// Exact values at the origin:
///   D_nu(0)  = sqrt(pi) 2^{nu/2} / Gamma((1-nu)/2)
///   D'_nu(0) = -sqrt(2 pi) 2^{nu/2} / Gamma(-nu/2)
std::complex<double> pcf_d_at_zero(std::complex<double> nu);
std::complex<double> pcf_d_derivative_at_zero(std::complex<double> nu);

namespace detail {

/// One evaluation of D_nu by the series route (used by the seam test).
PcfResult pcf_d_series(std::complex<double> nu, std::complex<double> z);

/// One evaluation by ODE continuation from the origin (any |z| in domain).
PcfResult pcf_d_ode(std::complex<double> nu, std::complex<double> z);

/// Error bookkeeping of one propagation.  Away from the oscillatory rays
/// the Weber pair splits into growing/shrinking solutions; an error
/// seeded at growth level G_k is amplified by e^{2(G_end - G_k)} relative
/// to a shrinking target, which is what `contamination()` bounds.
struct PropagationLog {
  double truncation = 0.0;  // plain sum of local truncation estimates
  double weighted = 0.0;    // truncation weighted by e^{-2 G_k}
  double growth = 0.0;      // integral of |Re sqrt(q)| along the path
  double contamination() const;
};

/// Adaptive Taylor propagation of w'' = (c2 s^2 + c1 s + c0) w along real
/// s from s0 to s1, carrying (w, w').  Rescales (w, w') into double
/// range, accumulating the exponent in log_scale.
PropagationLog weber_propagate(std::complex<double> c2,
                               std::complex<double> c1,
                               std::complex<double> c0, double s0, double s1,
                               std::complex<double>& w,
                               std::complex<double>& wp, double& log_scale,
                               double tol);

}  // namespace detail

}  // namespace qvt
