// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

namespace qvt {

inline constexpr int max_landau_index = 500;

/// Orthonormal Hermite function
///   chi_n(xi) = (2^n n! sqrt(pi))^{-1/2} e^{-xi^2/2} H_n(xi),
/// evaluated by the normalized three-term recurrence
///   chi_{n+1} = xi sqrt(2/(n+1)) chi_n - sqrt(n/(n+1)) chi_{n-1},
/// which never forms 2^n n! and stays bounded for n <= 500.
/// Values beyond the deep Gaussian tail underflow to 0.
/// Throws ErrorCode::index_too_large for n > max_landau_index.
double hermite_function(int n, double xi);

/// Fill out[0..n_max] with chi_0(xi) .. chi_{n_max}(xi).
void hermite_function_all(int n_max, double xi, std::span<double> out);

/// d chi_n / d xi = sqrt(2n) chi_{n-1} - xi chi_n.
double hermite_function_derivative(int n, double xi);

/// Transverse mode with the field normalization attached:
///   (qB)^{1/4} chi_n(xi).
double hermite_mode_value(double qB, int n, double xi);

}  // namespace qvt
