// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace qvt {

/// log Gamma(z) for complex z, Lanczos approximation with reflection for
/// Re(z) < 0.5.  ~1e-13 relative accuracy away from the poles.
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma_fn(std::complex<double> z);

/// 1/Gamma(z); entire, exactly 0 at the poles z = 0, -1, -2, ...
std::complex<double> reciprocal_gamma(std::complex<double> z);

/// Principal argument of Gamma(z), wrapped to (-pi, pi].  Stable for large
/// |Im z| (computed from log_gamma, not from the possibly overflowing
/// Gamma value itself).
double arg_gamma(std::complex<double> z);

}  // namespace qvt
