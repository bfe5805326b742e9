// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace qvt {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b].  Stops when the summed
/// error estimate drops below max(abs_tol, rel_tol * |value|).  The
/// subdivision order and the final pairwise summation are deterministic,
/// so repeated runs produce bit-identical results.
/// Throws ErrorCode::quadrature_failure if the budget is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           int initial_panels = 1, int max_panels = 4000);

}  // namespace qvt
