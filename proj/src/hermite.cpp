// SPDX-License-Identifier: Apache-2.0
#include "qvt/hermite.hpp"

#include <cmath>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"

namespace qvt {

namespace {

const double kPiQuarterInv = std::pow(constants::pi, -0.25);

void check_index(int n) {
  if (n < 0 || n > max_landau_index) {
    throw Error(ErrorCode::index_too_large,
                "hermite: Landau index outside [0, 500]");
  }
}

}  // namespace

double hermite_function(int n, double xi) {
  check_index(n);
  double prev = 0.0;
  double cur = kPiQuarterInv * std::exp(-0.5 * xi * xi);
  for (int k = 0; k < n; ++k) {
    const double next = xi * std::sqrt(2.0 / (k + 1)) * cur -
                        std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void hermite_function_all(int n_max, double xi, std::span<double> out) {
  check_index(n_max);
  if (out.size() < static_cast<std::size_t>(n_max) + 1) {
    throw Error(ErrorCode::out_of_domain,
                "hermite_function_all: output span too small");
  }
  double prev = 0.0;
  double cur = kPiQuarterInv * std::exp(-0.5 * xi * xi);
  out[0] = cur;
  for (int k = 0; k < n_max; ++k) {
    const double next = xi * std::sqrt(2.0 / (k + 1)) * cur -
                        std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    out[static_cast<std::size_t>(k) + 1] = cur;
  }
}

double hermite_function_derivative(int n, double xi) {
  check_index(n);
  const double lower = (n > 0) ? hermite_function(n - 1, xi) : 0.0;
  return std::sqrt(2.0 * n) * lower - xi * hermite_function(n, xi);
}

double hermite_mode_value(double qB, int n, double xi) {
  if (!(qB > 0.0)) {
    throw Error(ErrorCode::out_of_domain, "hermite_mode: qB must be > 0");
  }
  return std::pow(qB, 0.25) * hermite_function(n, xi);
}

}  // namespace qvt
