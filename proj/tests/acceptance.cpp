// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: every release criterion in one binary, one line per
// criterion, nonzero exit if any fails.  Tolerances are fixed here, not
// configurable.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "qvt/constants.hpp"
#include "qvt/em_fields.hpp"
#include "qvt/hermite.hpp"
#include "qvt/modes.hpp"
#include "qvt/propulsion.hpp"
#include "qvt/pusher.hpp"
#include "qvt/quadrature.hpp"
#include "qvt/schwinger.hpp"
#include "qvt/vev.hpp"

using namespace qvt;
using constants::c;
using constants::c2;
using constants::electron_mass;
using constants::elementary_charge;
using constants::pi;
using cplx = std::complex<double>;

namespace {

int failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int index, const char* name, bool pass, const char* detail,
            double seconds) {
  std::printf("[%s] criterion %d: %-22s %s (%.2f s)\n",
              pass ? "PASS" : "FAIL", index, name, detail, seconds);
  if (!pass) ++failures;
}

double invariant_error(const FieldConfiguration& f,
                       const FieldConfiguration& g) {
  const FieldInvariants a = invariants(f);
  const FieldInvariants b = invariants(g);
  const double s1 = std::max(std::abs(a.i1), norm(f.E) * norm(f.B));
  const double s2 =
      std::max(std::abs(a.i2), dot(f.E, f.E) + c2 * dot(f.B, f.B));
  return std::max(std::abs(b.i1 - a.i1) / s1, std::abs(b.i2 - a.i2) / s2);
}

// 1. colinearization over 1000 random non-perpendicular configurations
void criterion_colinearization() {
  Timer timer;
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> e_exp(0.0, 5.0);
  std::uniform_real_distribution<double> b_exp(-3.0, 1.0);

  double worst_cross = 0.0;
  double worst_inv = 0.0;
  int done = 0;
  while (done < 1000) {
    FieldConfiguration f;
    f.E = std::pow(10.0, e_exp(rng)) * Vec3{unit(rng), unit(rng), unit(rng)};
    f.B = std::pow(10.0, b_exp(rng)) * Vec3{unit(rng), unit(rng), unit(rng)};
    const double en = norm(f.E), bn = norm(f.B);
    if (en == 0.0 || bn == 0.0) continue;
    if (std::abs(dot(f.E, f.B)) / (en * bn) <= 0.01) continue;
    ++done;
    const BoostResult r = colinearizing_boost(f);
    worst_cross = std::max(
        worst_cross, norm(cross(r.boosted.E, r.boosted.B)) /
                         (norm(r.boosted.E) * norm(r.boosted.B)));
    worst_inv = std::max(worst_inv, invariant_error(f, r.boosted));
  }
  const double sec = timer.seconds();
  const bool pass = worst_cross < 1e-10 && worst_inv < 1e-12 && sec < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "worst cross %.2e (<1e-10), worst invariant %.2e (<1e-12)",
                worst_cross, worst_inv);
  report(1, "colinearization", pass, detail, sec);
}

// 2. pusher drift equivalence for electron and positron
void criterion_drift_equivalence() {
  Timer timer;
  const FieldConfiguration f{{0.0, 1e3, 0.0}, {0.0, 0.0, 0.1}};
  const Vec3 expected = drift_velocity(f).v;

  const double m = electron_mass;
  const double period =
      2.0 * pi * m / (elementary_charge * 0.1);
  const int steps_per_period = 1024;
  const int periods = 64;

  auto run = [&](double q) {
    const Trajectory traj =
        push_particle(f, q, m, {0, 0, 0}, {0, 0, 0},
                      period / steps_per_period,
                      steps_per_period * periods);
    return gyro_averaged_drift(traj, q, m, 0.1);
  };
  const Vec3 electron = run(-elementary_charge);
  const Vec3 positron = run(elementary_charge);

  const double scale = norm(expected);
  const double err_e = norm(electron - expected) / scale;
  const double err_p = norm(positron - expected) / scale;
  const double agree = norm(electron - positron) / scale;
  const double sec = timer.seconds();
  const bool pass =
      err_e < 0.01 && err_p < 0.01 && agree < 1e-3 && sec < 10.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "drift err e- %.2e, e+ %.2e (<1e-2), species gap %.2e (<1e-3)",
                err_e, err_p, agree);
  report(2, "drift equivalence", pass, detail, sec);
}

// 3. Schwinger regime: exact zero at laboratory field, series ratio at E_c
void criterion_schwinger() {
  Timer timer;
  const VacuumDecayQuery lab{1e5, electron_mass, elementary_charge, 20};
  const double w_lab = pair_production_rate(lab);

  const double ec = critical_field(electron_mass, elementary_charge);
  const VacuumDecayQuery crit{ec, electron_mass, elementary_charge, 20};
  const double ratio =
      pair_production_rate(crit) / dominant_term_rate(crit);

  // high-precision oracle: sum_k k^-2 e^{-(k-1) pi} in long double
  long double oracle = 0.0L;
  for (int k = 60; k >= 1; --k) {
    oracle += std::exp(-(k - 1) * (long double)pi) / (long double)(k * k);
  }

  const double ec_expected = 1.3232854749481656e18;
  const bool pass = w_lab == 0.0 &&
                    std::abs(ratio - (double)oracle) < 1e-4 &&
                    std::abs(ratio - 1.0110) < 2e-4 &&
                    std::abs(ec - ec_expected) / ec_expected < 1e-12;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "w(1e5 V/m) = %.1f, ratio %.6f vs oracle %.6f, E_c %.4e",
                w_lab, ratio, (double)oracle, ec);
  report(3, "Schwinger regime", pass, detail, timer.seconds());
}

// 4. thruster dominance over 1e6 sampled speeds
void criterion_thruster() {
  Timer timer;
  const double photon = photon_thruster_f_over_p();
  std::mt19937 rng(202);
  std::uniform_real_distribution<double> lin(1e-12, 1.0 - 1e-12);
  bool dominated = true;
  for (int i = 0; i < 500000; ++i) {
    const double v = lin(rng) * c;
    if (pair_thruster_f_over_p(v) >= photon) dominated = false;
  }
  std::uniform_real_distribution<double> expo(-12.0, 0.0);
  for (int i = 0; i < 500000; ++i) {
    const double v = c * (1.0 - std::pow(10.0, expo(rng)));
    if (pair_thruster_f_over_p(v) >= photon) dominated = false;
  }
  const double ratio = photon / pair_thruster_f_over_p(0.01 * c);
  const bool pass = dominated && std::abs(ratio - 100.0) <= 0.01;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "photon > pair at 1e6 samples: %s, ratio(0.01c) = %.6f",
                dominated ? "yes" : "no", ratio);
  report(4, "thruster dominance", pass, detail, timer.seconds());
}

// 5. Wronskian / quantization across tau, n and families
void criterion_wronskian() {
  Timer timer;
  const double triples[3][3] = {{1.0, 1.0, 0.0},
                                {1.0, 1.0, 1.0},
                                {0.1, 3.0, 0.5}};
  double worst = 0.0;
  for (const auto& t : triples) {
    for (int n : {0, 1, 5, 20}) {
      const ModeContext ctx(t[0], t[1], t[2], n, 0.0, 0.0);
      for (int i = 0; i <= 80; ++i) {
        const double tau = -10.0 + 20.0 * i / 80.0;
        worst = std::max(
            worst, std::abs(wronskian(ctx, tau) - cplx(0.0, -2.0)));
      }
    }
  }
  const double sec = timer.seconds();
  const bool pass = worst < 1e-8 && sec < 30.0;
  char detail[160];
  std::snprintf(detail, sizeof detail, "max |W + 2i| = %.2e (<1e-8)", worst);
  report(5, "Wronskian", pass, detail, sec);
}

// 6. Hermite orthonormality and smeared completeness
void criterion_hermite() {
  Timer timer;
  double worst_ortho = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (int m = n; m <= 20; ++m) {
      const QuadratureResult q = integrate(
          [n, m](double x) {
            return hermite_function(n, x) * hermite_function(m, x);
          },
          -16.0, 16.0, 1e-13, 1e-13, 8);
      const double target = (n == m) ? 1.0 : 0.0;
      worst_ortho = std::max(worst_ortho, std::abs(q.value - target));
    }
  }

  const int n_terms = 200;
  const double mu = 1.0;
  auto g = [mu](double x) { return std::exp(-0.5 * (x - mu) * (x - mu)); };
  std::vector<double> chi_x(n_terms + 1), chi_y(n_terms + 1);
  double worst_complete = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double x = -3.0 + 6.0 * i / 40.0;
    hermite_function_all(n_terms, x, chi_x);
    const QuadratureResult q = integrate(
        [&](double y) {
          hermite_function_all(n_terms, y, chi_y);
          double k = 0.0;
          for (int n = 0; n <= n_terms; ++n) k += chi_x[n] * chi_y[n];
          return k * g(y);
        },
        -9.0, 11.0, 1e-10, 1e-10, 8);
    worst_complete = std::max(worst_complete, std::abs(q.value - g(x)));
  }

  const bool pass = worst_ortho < 1e-10 && worst_complete < 1e-3;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "orthonormality %.2e (<1e-10), completeness %.2e (<1e-3)",
                worst_ortho, worst_complete);
  report(6, "Hermite structure", pass, detail, timer.seconds());
}

// 7. vanishing vacuum expectation values
void criterion_vevs() {
  Timer timer;
  using namespace qvt::vev;
  bool pass = true;
  char detail[240];

  // exact operator-algebra zeros
  const ModeFamily algebra_fam{1.0, 1.0, 0.0};
  RegularizationWindow w0;
  w0.n_max = 2;
  w0.k_cut = 8.0;
  w0.quadrature_points = 64;
  pass &= momentum_vev(Component::x, algebra_fam, w0).value == 0.0;
  pass &= momentum_vev(Component::y, algebra_fam, w0).value == 0.0;
  pass &= current_vev(Component::z, algebra_fam, w0).value == 0.0;

  // numeric zeros under four geometric windows each
  const ModeFamily numeric_fam{0.1, 3.0, 0.5};  // a_0 = -16.25
  double worst_pz = 0.0, worst_jx = 0.0, worst_jy = 0.0;
  for (double cut : {4.0, 8.0, 16.0, 32.0}) {
    RegularizationWindow w;
    w.n_max = 4;
    w.k_cut = cut;
    w.quadrature_points = 64;
    const VevResult pz = momentum_vev(Component::z, numeric_fam, w);
    worst_pz = std::max(worst_pz, std::abs(pz.value) / pz.scale);
    const VevResult jx = current_vev(Component::x, numeric_fam, w);
    worst_jx = std::max(worst_jx, std::abs(jx.value) / jx.scale);
    RegularizationWindow wy = w;
    wy.n_max = 2;
    const VevResult jy = current_vev(Component::y, numeric_fam, wy);
    worst_jy = std::max(worst_jy, std::abs(jy.value) / jy.scale);
  }
  pass &= worst_pz < 1e-8 && worst_jx < 1e-8 && worst_jy < 1e-8;

  // asymmetric-window control for J^x
  RegularizationWindow sym;
  sym.n_max = 10;
  sym.k_cut = 4.0;
  sym.quadrature_points = 64;
  RegularizationWindow skew = sym;
  skew.upper_scale = 2.0;
  const VevResult jx_sym = current_vev(Component::x, algebra_fam, sym);
  const VevResult jx_skew = current_vev(Component::x, algebra_fam, skew);
  const double sym_ratio =
      std::max(std::abs(jx_sym.value) / jx_sym.scale, 1e-300);
  const double skew_ratio = std::abs(jx_skew.value) / jx_skew.scale;
  pass &= skew_ratio >= 1e6 * sym_ratio;

  const double sec = timer.seconds();
  pass &= sec < 120.0;
  std::snprintf(detail, sizeof detail,
                "Pz %.1e, Jx %.1e, Jy %.1e (<1e-8); control skew/sym %.1e "
                "(>=1e6)",
                worst_pz, worst_jx, worst_jy, skew_ratio / sym_ratio);
  report(7, "vanishing VEVs", pass, detail, sec);
}

// 8. separated-equation residuals with observed 4th-order convergence
void criterion_residuals() {
  Timer timer;
  double worst = 0.0;
  for (const auto& t :
       std::vector<std::array<double, 3>>{{1.0, 1.0, 0.0}, {0.5, 2.0, 0.7}}) {
    for (int n : {0, 1, 4}) {
      const ModeContext ctx(t[0], t[1], t[2], n, 0.1, -0.2);
      worst = std::max(worst, residual_kg(ctx, 0.3, 0.4));
    }
  }

  const ModeContext ctx(1.0, 1.0, 0.0, 2, 0.0, 0.0);
  const double rt1 = residual_kg_time(ctx, 0.3, 0.08);
  const double rt2 = residual_kg_time(ctx, 0.3, 0.04);
  const double rz1 = residual_kg_space(ctx, 0.4, 0.08);
  const double rz2 = residual_kg_space(ctx, 0.4, 0.04);
  const double order_t = std::log2(rt1 / rt2);
  const double order_z = std::log2(rz1 / rz2);

  const bool pass =
      worst < 1e-6 && order_t > 3.0 && order_z > 3.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "max residual %.2e (<1e-6), observed orders %.2f / %.2f",
                worst, order_t, order_z);
  report(8, "separated-ODE residuals", pass, detail, timer.seconds());
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_colinearization();
  criterion_drift_equivalence();
  criterion_schwinger();
  criterion_thruster();
  criterion_wronskian();
  criterion_hermite();
  criterion_vevs();
  criterion_residuals();
  if (failures == 0) {
    std::printf("all 8 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", failures);
  return 1;
}
