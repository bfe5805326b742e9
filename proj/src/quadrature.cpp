// SPDX-License-Identifier: Apache-2.0
#include "qvt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qvt/error.hpp"

namespace qvt {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    result_kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) {
      result_gauss += kWg[j / 2] * fsum;
    }
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = result_kronrod * half;
  p.error = std::abs((result_kronrod - result_gauss) * half);
  return p;
}

double pairwise_sum(const std::vector<double>& v, std::size_t lo,
                    std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           int initial_panels, int max_panels) {
  if (!(b > a)) {
    if (a == b) return {0.0, 0.0, 0};
    QuadratureResult r = integrate(f, b, a, abs_tol, rel_tol, initial_panels,
                                   max_panels);
    r.value = -r.value;
    return r;
  }
  initial_panels = std::max(1, initial_panels);

  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(max_panels));
  int evaluations = 0;
  const double width = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == initial_panels) ? b : a + (i + 1) * width;
    panels.push_back(evaluate_panel(f, lo, hi));
    evaluations += 15;
  }

  auto totals = [&panels]() {
    double value = 0.0, error = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair<double, double>(value, error);
  };

  while (true) {
    auto [value, error] = totals();
    if (error <= std::max(abs_tol, rel_tol * std::abs(value))) break;
    if (static_cast<int>(panels.size()) >= max_panels) {
      throw Error(ErrorCode::quadrature_failure,
                  "integrate: panel budget exhausted before convergence");
    }
    // split the panel with the largest error estimate (first of ties)
    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& p, const Panel& q) { return p.error < q.error; });
    const double lo = worst->a, hi = worst->b;
    const double mid = 0.5 * (lo + hi);
    *worst = evaluate_panel(f, lo, mid);
    panels.push_back(evaluate_panel(f, mid, hi));
    evaluations += 30;
  }

  // Deterministic reduction: sort by left endpoint, then pairwise sum.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& p, const Panel& q) { return p.a < q.a; });
  std::vector<double> values(panels.size());
  double error = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    values[i] = panels[i].value;
    error += panels[i].error;
  }
  QuadratureResult out;
  out.value = pairwise_sum(values, 0, values.size());
  out.error_estimate = error;
  out.evaluations = evaluations;
  return out;
}

}  // namespace qvt
