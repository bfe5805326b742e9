// SPDX-License-Identifier: Apache-2.0
#include "qvt/cgamma.hpp"

#include <cmath>

#include "qvt/constants.hpp"

namespace qvt {

namespace {

using cplx = std::complex<double>;
using constants::pi;

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6};

// sin(pi z) with argument reduction: exact zeros at integer z and full
// accuracy next to them.
cplx sin_pi(cplx z) {
  const double k = std::round(z.real());
  const cplx s = std::sin(pi * (z - k));
  return std::fmod(k, 2.0) == 0.0 ? s : -s;
}

// log(sin(pi z)) without overflow for large |Im z|.  The imaginary part
// may differ from the principal one by a multiple of 2*pi, which is
// immaterial everywhere this is used.
cplx log_sin_pi(cplx z) {
  if (std::abs(z.imag()) < 1.0) return std::log(sin_pi(z));
  const cplx ipiz = cplx(0.0, pi) * z;
  if (z.imag() >= 0.0) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i)
    return -ipiz + std::log((std::exp(2.0 * ipiz) - 1.0) / cplx(0.0, 2.0));
  }
  // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2i)
  return ipiz + std::log((1.0 - std::exp(-2.0 * ipiz)) / cplx(0.0, 2.0));
}

cplx log_gamma_positive(cplx z) {
  // valid for Re(z) >= 0.5
  cplx sum = kLanczos[0];
  for (int k = 1; k < 15; ++k) {
    sum += kLanczos[k] / (z + double(k - 1));
  }
  const cplx base = z + (kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * pi) + (z - 0.5) * std::log(base) - base +
         std::log(sum);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() >= 0.5) return log_gamma_positive(z);
  // reflection: log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1 - z)
  return std::log(pi) - log_sin_pi(z) - log_gamma_positive(1.0 - z);
}

std::complex<double> gamma_fn(std::complex<double> z) {
  return std::exp(log_gamma(z));
}

std::complex<double> reciprocal_gamma(std::complex<double> z) {
  if (z.real() >= 0.5) return std::exp(-log_gamma_positive(z));
  // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi; gives exact zeros at the
  // poles of Gamma.
  const cplx s = sin_pi(z);
  if (s == 0.0) return 0.0;
  return s * std::exp(log_gamma_positive(1.0 - z)) / pi;
}

double arg_gamma(std::complex<double> z) {
  double a = std::remainder(log_gamma(z).imag(), 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;  // branch (-pi, pi]
  return a;
}

}  // namespace qvt
