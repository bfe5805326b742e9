// SPDX-License-Identifier: Apache-2.0
#include "qvt/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include <json.hpp>

#include "qvt/constants.hpp"
#include "qvt/em_fields.hpp"
#include "qvt/error.hpp"
#include "qvt/hermite.hpp"
#include "qvt/modes.hpp"
#include "qvt/propulsion.hpp"
#include "qvt/pusher.hpp"
#include "qvt/quadrature.hpp"
#include "qvt/schwinger.hpp"
#include "qvt/vev.hpp"

namespace qvt {

namespace {

using constants::c;
using constants::c2;
using constants::electron_mass;
using constants::elementary_charge;
using constants::hbar;

std::string format_real(double v) {
  // shortest round-trip representation, same as the JSON writer
  return nlohmann::json(v).dump();
}

std::string stringify(const ScenarioValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_real(*d);
  if (const auto* i = std::get_if<long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* vec = std::get_if<Vec3>(&v)) {
    return format_real(vec->x) + "," + format_real(vec->y) + "," +
           format_real(vec->z);
  }
  if (const auto* dl = std::get_if<std::vector<double>>(&v)) {
    std::string out;
    for (std::size_t i = 0; i < dl->size(); ++i) {
      if (i) out += ",";
      out += format_real((*dl)[i]);
    }
    return out;
  }
  if (const auto* il = std::get_if<std::vector<long>>(&v)) {
    std::string out;
    for (std::size_t i = 0; i < il->size(); ++i) {
      if (i) out += ",";
      out += std::to_string((*il)[i]);
    }
    return out;
  }
  return "?";
}

Report report_skeleton(const Scenario& s) {
  Report r;
  r.scenario_name = s.name;
  r.subcommand = subcommand_name(s.subcommand);
  for (const auto& [k, v] : s.parameters) {
    r.parameters.emplace_back(k, stringify(v));
  }
  r.constants = constants_table();
  return r;
}

void add_vec(Report& r, const std::string& prefix, const Vec3& v) {
  r.scalars.emplace_back(prefix + "_x", v.x);
  r.scalars.emplace_back(prefix + "_y", v.y);
  r.scalars.emplace_back(prefix + "_z", v.z);
}

// Relative invariant drift, normalized by the natural scale of each
// invariant so that near-null configurations stay well conditioned.  For
// generic boosts the scale spans both frames: an independent boost speed
// can make |E'| ~ gamma u |B| dwarf |E|, and the dot products then carry
// the invariant only relative to the products actually formed.  The
// colinearizing boost produces no such amplification (u ~ E/B), so its
// checks pass `span_frames = false` and hold against the input frame.
double i1_error(const FieldConfiguration& f0, const FieldConfiguration& f1,
                const FieldInvariants& a, const FieldInvariants& b,
                bool span_frames) {
  double scale = std::max(std::abs(a.i1), norm(f0.E) * norm(f0.B) + 1e-300);
  if (span_frames) scale = std::max(scale, norm(f1.E) * norm(f1.B));
  return std::abs(b.i1 - a.i1) / scale;
}

double i2_error(const FieldConfiguration& f0, const FieldConfiguration& f1,
                const FieldInvariants& a, const FieldInvariants& b,
                bool span_frames) {
  double scale = std::max(
      std::abs(a.i2), dot(f0.E, f0.E) + c2 * dot(f0.B, f0.B) + 1e-300);
  if (span_frames) {
    scale = std::max(scale, dot(f1.E, f1.E) + c2 * dot(f1.B, f1.B));
  }
  return std::abs(b.i2 - a.i2) / scale;
}

// ----------------------------------------------------------------- drift
Report run_drift(const Scenario& s) {
  Report r = report_skeleton(s);
  const FieldConfiguration f{s.vec3("e_field"), s.vec3("b_field")};
  const DriftResult d = drift_velocity(f);

  add_vec(r, "v", d.v);
  r.scalars.emplace_back("speed", norm(d.v));
  r.labels.emplace_back("exceeds_c", d.exceeds_c ? "true" : "false");

  const double vmag = norm(d.v);
  const double pe = vmag > 0.0 && norm(f.E) > 0.0
                        ? std::abs(dot(d.v, f.E)) / (vmag * norm(f.E))
                        : 0.0;
  const double pb = vmag > 0.0 ? std::abs(dot(d.v, f.B)) / (vmag * norm(f.B))
                               : 0.0;
  const double tol = s.real("tolerance");
  r.add_check("perpendicular_to_E", pe, tol, pe <= tol);
  r.add_check("perpendicular_to_B", pb, tol, pb <= tol);
  if (s.has("expect_v")) {
    const Vec3 expect = s.vec3("expect_v");
    const double scale = std::max(norm(expect), 1e-300);
    const double err = norm(d.v - expect) / scale;
    r.add_check("matches_expected_drift", err, tol, err <= tol);
  }
  return r;
}

// ----------------------------------------------------------------- boost
Report run_boost(const Scenario& s) {
  Report r = report_skeleton(s);
  const FieldConfiguration f{s.vec3("e_field"), s.vec3("b_field")};
  const double u = s.real("speed");
  const Vec3 axis = s.vec3("axis");

  const FieldConfiguration g = boost_fields(f, u, axis);
  add_vec(r, "e_boosted", g.E);
  add_vec(r, "b_boosted", g.B);
  r.scalars.emplace_back("gamma", lorentz_gamma(u));

  const FieldInvariants ia = invariants(f);
  const FieldInvariants ib = invariants(g);
  const double tol = s.real("tolerance");
  const double e1 = i1_error(f, g, ia, ib, true);
  const double e2 = i2_error(f, g, ia, ib, true);
  r.add_check("invariant_EB_preserved", e1, tol, e1 <= tol);
  r.add_check("invariant_E2_c2B2_preserved", e2, tol, e2 <= tol);

  const FieldConfiguration back = boost_fields(g, -u, axis);
  const double scale = std::max({norm(f.E), c * norm(f.B), 1e-300});
  const double round =
      (norm(back.E - f.E) + c * norm(back.B - f.B)) / scale;
  r.add_check("roundtrip_identity", round, tol, round <= tol);
  return r;
}

// -------------------------------------------------------------- colinear
Report run_colinear(const Scenario& s) {
  Report r = report_skeleton(s);
  const double cross_tol = s.real("cross_tolerance");
  const double inv_tol = s.real("invariant_tolerance");

  if (s.has("e_field") && s.has("b_field")) {
    const FieldConfiguration f{s.vec3("e_field"), s.vec3("b_field")};
    const BoostResult br = colinearizing_boost(f);
    r.scalars.emplace_back("u", br.u);
    r.scalars.emplace_back("gamma", br.gamma);
    add_vec(r, "axis", br.axis);
    add_vec(r, "e_boosted", br.boosted.E);
    add_vec(r, "b_boosted", br.boosted.B);

    const double en = norm(br.boosted.E), bn = norm(br.boosted.B);
    const double cross_norm =
        en > 0.0 && bn > 0.0 ? norm(cross(br.boosted.E, br.boosted.B)) / (en * bn)
                             : 0.0;
    r.add_check("colinearity", cross_norm, cross_tol, cross_norm <= cross_tol);

    const FieldInvariants ia = invariants(f);
    const FieldInvariants ib = invariants(br.boosted);
    const double e1 = i1_error(f, br.boosted, ia, ib, false);
    const double e2 = i2_error(f, br.boosted, ia, ib, false);
    r.add_check("invariant_EB_preserved", e1, inv_tol, e1 <= inv_tol);
    r.add_check("invariant_E2_c2B2_preserved", e2, inv_tol, e2 <= inv_tol);

    const double resid = colinearizing_residual(f, br.u);
    r.add_check("boost_equation_residual", resid, 1e-12, resid <= 1e-12);
  }

  const long trials = s.integer("random_trials");
  if (trials > 0) {
    std::mt19937 rng(static_cast<unsigned>(s.integer("seed")));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> e_exp(0.0, 5.0);
    std::uniform_real_distribution<double> b_exp(-3.0, 1.0);

    double worst_cross = 0.0, worst_inv = 0.0, worst_resid = 0.0;
    long done = 0;
    while (done < trials) {
      FieldConfiguration f;
      f.E = std::pow(10.0, e_exp(rng)) *
            Vec3{unit(rng), unit(rng), unit(rng)};
      f.B = std::pow(10.0, b_exp(rng)) *
            Vec3{unit(rng), unit(rng), unit(rng)};
      const double en = norm(f.E), bn = norm(f.B);
      if (en == 0.0 || bn == 0.0) continue;
      if (std::abs(dot(f.E, f.B)) / (en * bn) <= 0.01) continue;
      ++done;

      const BoostResult br = colinearizing_boost(f);
      const double eb = norm(br.boosted.E), bb = norm(br.boosted.B);
      worst_cross = std::max(
          worst_cross, norm(cross(br.boosted.E, br.boosted.B)) / (eb * bb));
      const FieldInvariants ia = invariants(f);
      const FieldInvariants ib = invariants(br.boosted);
      worst_inv = std::max({worst_inv, i1_error(f, br.boosted, ia, ib, false),
                            i2_error(f, br.boosted, ia, ib, false)});
      worst_resid = std::max(worst_resid, colinearizing_residual(f, br.u));
    }
    r.scalars.emplace_back("random_trials", double(trials));
    r.add_check("random_colinearity_worst", worst_cross, cross_tol,
                worst_cross <= cross_tol);
    r.add_check("random_invariants_worst", worst_inv, inv_tol,
                worst_inv <= inv_tol);
    r.add_check("random_boost_equation_worst", worst_resid, 1e-12,
                worst_resid <= 1e-12);
  }
  return r;
}

// ------------------------------------------------------------------ push
struct SpeciesRun {
  Vec3 drift;
  double energy_drift = 0.0;
};

SpeciesRun push_species(const FieldConfiguration& f, double q, double m,
                        const Vec3& x0, const Vec3& v0, long steps_per_period,
                        long periods) {
  const double b_mag = norm(f.B);
  const double period = 2.0 * constants::pi * m / (std::abs(q) * b_mag);
  const double dt = period / double(steps_per_period);
  const long steps = steps_per_period * periods;
  if (steps_per_period < 20 || periods < 1 || steps > 50'000'000) {
    throw Error(ErrorCode::schema,
                "push: need steps_per_period >= 20, periods >= 1 and at "
                "most 5e7 total steps");
  }
  const Trajectory traj =
      push_particle(f, q, m, x0, v0, dt, static_cast<int>(steps));
  SpeciesRun out;
  out.drift = gyro_averaged_drift(traj, q, m, b_mag);
  out.energy_drift = relative_energy_drift(traj);
  return out;
}

Report run_push(const Scenario& s) {
  Report r = report_skeleton(s);
  const FieldConfiguration f{s.vec3("e_field"), s.vec3("b_field")};
  if (norm(f.B) == 0.0) {
    throw Error(ErrorCode::zero_magnetic_field,
                "push scenario needs |B| > 0 for gyro-averaged drift");
  }

  double q, m;
  const std::string& particle = s.text("particle");
  if (particle == "electron") {
    q = -elementary_charge;
    m = electron_mass;
  } else if (particle == "positron") {
    q = elementary_charge;
    m = electron_mass;
  } else if (particle == "custom") {
    if (!s.has("charge") || !s.has("mass")) {
      throw Error(ErrorCode::schema,
                  "push: custom particle needs charge and mass");
    }
    q = s.real("charge");
    m = s.real("mass");
  } else {
    throw Error(ErrorCode::schema,
                "push: particle must be electron, positron or custom");
  }

  const SpeciesRun run =
      push_species(f, q, m, s.vec3("x0"), s.vec3("v0"),
                   s.integer("steps_per_period"), s.integer("periods"));
  const Vec3 formula = drift_velocity(f).v;
  add_vec(r, "gyro_averaged_drift", run.drift);
  add_vec(r, "formula_drift", formula);
  r.scalars.emplace_back("energy_drift", run.energy_drift);

  const double dtol = s.real("drift_tolerance");
  const double scale = std::max(norm(formula), 1e-300);
  const double err = norm(run.drift - formula) / scale;
  r.add_check("drift_matches_ExB_over_B2", err, dtol, err <= dtol);

  if (norm(f.E) == 0.0) {
    r.add_check("energy_conserved", run.energy_drift, 1e-6,
                run.energy_drift <= 1e-6);
  }

  if (s.boolean("compare_charge_sign")) {
    const SpeciesRun mirror =
        push_species(f, -q, m, s.vec3("x0"), s.vec3("v0"),
                     s.integer("steps_per_period"), s.integer("periods"));
    add_vec(r, "mirror_drift", mirror.drift);
    const double agreement = norm(run.drift - mirror.drift) / scale;
    const double stol = s.real("species_tolerance");
    r.add_check("charge_sign_agreement", agreement, stol, agreement <= stol);
  }
  return r;
}

// ------------------------------------------------------------- schwinger
Report run_schwinger(const Scenario& s) {
  Report r = report_skeleton(s);
  double m, q;
  const std::string& particle = s.text("particle");
  if (particle == "electron") {
    m = electron_mass;
    q = elementary_charge;
  } else if (particle == "custom") {
    if (!s.has("mass") || !s.has("charge")) {
      throw Error(ErrorCode::schema,
                  "schwinger: custom particle needs mass and charge");
    }
    m = s.real("mass");
    q = s.real("charge");
  } else {
    throw Error(ErrorCode::schema,
                "schwinger: particle must be electron or custom");
  }

  VacuumDecayQuery query;
  query.field = s.real("e_field_magnitude");
  query.mass = m;
  query.charge = q;
  query.kmax = static_cast<int>(s.integer("kmax"));

  const double w = pair_production_rate(query);
  const double w1 = dominant_term_rate(query);
  r.scalars.emplace_back("rate", w);
  r.scalars.emplace_back("dominant_term_rate", w1);
  r.scalars.emplace_back("critical_field", critical_field(m, q));
  const bool persists = w == 0.0;
  r.labels.emplace_back("vacuum_persists", persists ? "true" : "false");
  if (w1 > 0.0) {
    r.scalars.emplace_back("series_to_dominant_ratio", w / w1);
  }

  if (s.boolean("expect_zero")) {
    r.add_check("rate_is_zero_in_double", w, 0.0, w == 0.0);
  }
  if (s.has("expect_ratio")) {
    if (w1 <= 0.0) {
      r.add_check("series_ratio", 0.0, s.real("ratio_tolerance"), false);
    } else {
      const double dev = std::abs(w / w1 - s.real("expect_ratio"));
      const double tol = s.real("ratio_tolerance");
      r.add_check("series_ratio", dev, tol, dev <= tol);
    }
  }
  return r;
}

// -------------------------------------------------------------- thruster
Report run_thruster(const Scenario& s) {
  Report r = report_skeleton(s);
  const double mdot = s.real("mdot");
  const double v_min = s.real("v_min");
  const double v_max = s.real("v_max");
  const long count = s.integer("v_count");
  const bool log_spacing = s.text("spacing") == "log";
  if (count < 2 || !(v_min > 0.0) || !(v_max > v_min) || v_max >= c) {
    throw Error(ErrorCode::schema,
                "thruster: need 0 < v_min < v_max < c and v_count >= 2");
  }

  Table t;
  t.name = "sweep";
  t.columns = {"v", "P_exact", "P_approx", "F", "F_over_P_pair",
               "F_over_P_photon"};
  double min_margin = 1.0;
  const double fp_photon = photon_thruster_f_over_p();
  for (long i = 0; i < count; ++i) {
    const double frac = double(i) / double(count - 1);
    const double v = log_spacing
                         ? v_min * std::pow(v_max / v_min, frac)
                         : v_min + (v_max - v_min) * frac;
    const ThrusterPoint point{mdot, v};
    const PowerBreakdown p = pair_thruster_power(point);
    const double fp_pair = pair_thruster_f_over_p(v);
    t.rows.push_back({v, p.exact, p.approx, thrust(point), fp_pair,
                      fp_photon});
    min_margin = std::min(min_margin, (fp_photon - fp_pair) / fp_photon);
  }
  r.tables.push_back(std::move(t));
  r.scalars.emplace_back("photon_f_over_p", fp_photon);
  r.add_check("photon_dominates", min_margin, 0.0, min_margin > 0.0);
  return r;
}

// ----------------------------------------------------------------- modes
struct NaturalUnits {
  double qE, qB, m;
  bool converted = false;
  double qe_factor = 0.0, qb_factor = 0.0;
};

NaturalUnits natural_units(const Scenario& s) {
  NaturalUnits out{};
  const bool direct = s.has("qe") || s.has("qb");
  const bool si = s.has("e_si") || s.has("b_si");
  if (direct == si) {
    throw Error(ErrorCode::schema,
                "modes: give either (qe, qb) or (e_si, b_si), not both");
  }
  out.m = s.real("mass");
  if (direct) {
    if (!s.has("qe") || !s.has("qb")) {
      throw Error(ErrorCode::schema, "modes: need both qe and qb");
    }
    out.qE = s.real("qe");
    out.qB = s.real("qb");
    return out;
  }
  if (!s.has("e_si") || !s.has("b_si")) {
    throw Error(ErrorCode::schema, "modes: need both e_si and b_si");
  }
  // natural units with the electron mass as the mass scale:
  // qE_nat = q E hbar / (m_e^2 c^3), qB_nat = q B hbar / (m_e^2 c^2),
  // i.e. E in units of the critical field, B of the critical flux density.
  out.converted = true;
  out.qe_factor =
      elementary_charge * hbar / (electron_mass * electron_mass * c2 * c);
  out.qb_factor =
      elementary_charge * hbar / (electron_mass * electron_mass * c2);
  out.qE = s.real("e_si") * out.qe_factor;
  out.qB = s.real("b_si") * out.qb_factor;
  return out;
}

Report run_modes(const Scenario& s) {
  Report r = report_skeleton(s);
  const NaturalUnits nat = natural_units(s);
  if (nat.converted) {
    r.conversions.emplace_back("qe_natural_per_volt_per_meter",
                               nat.qe_factor);
    r.conversions.emplace_back("qb_natural_per_tesla", nat.qb_factor);
    r.conversions.emplace_back("qe_natural", nat.qE);
    r.conversions.emplace_back("qb_natural", nat.qB);
  }
  const std::string& mode = s.text("mode");
  const auto& n_list = s.int_list("n_list");
  const double kx = s.real("kx");
  const double ky = s.real("ky");

  if (mode == "evaluate") {
    const int n = static_cast<int>(n_list.front());
    const ModeContext ctx(nat.qE, nat.qB, nat.m, n, kx, ky);
    r.scalars.emplace_back("beta_n", ctx.beta());
    r.scalars.emplace_back("a_n", ctx.a());
    r.scalars.emplace_back("delta", ctx.delta());
    r.scalars.emplace_back("xi_at_z", xi_of(ctx, s.real("z")));
    r.scalars.emplace_back("tau_at_t", tau_of(ctx, s.real("t")));
    Table t;
    t.name = "phi";
    t.columns = {"tau", "re", "im", "abs", "dre", "dim"};
    const long count = s.integer("tau_count");
    for (long i = 0; i < count; ++i) {
      const double tau =
          s.real("tau_min") +
          (s.real("tau_max") - s.real("tau_min")) * double(i) /
              double(std::max(count - 1, 1L));
      const ModeValue v = phi_mode(ctx, tau);
      t.rows.push_back({tau, v.value.real(), v.value.imag(),
                        std::abs(v.value), v.derivative.real(),
                        v.derivative.imag()});
    }
    r.tables.push_back(std::move(t));
    return r;
  }

  if (mode == "wronskian-scan") {
    const double tol = s.real("wronskian_tolerance");
    double worst = 0.0;
    Table t;
    t.name = "wronskian";
    t.columns = {"n", "tau", "deviation"};
    const long count = s.integer("tau_count");
    for (long n_val : n_list) {
      const ModeContext ctx(nat.qE, nat.qB, nat.m, static_cast<int>(n_val),
                            kx, ky);
      for (long i = 0; i < count; ++i) {
        const double tau =
            s.real("tau_min") +
            (s.real("tau_max") - s.real("tau_min")) * double(i) /
                double(std::max(count - 1, 1L));
        const double dev =
            std::abs(wronskian(ctx, tau) - std::complex<double>(0.0, -2.0));
        worst = std::max(worst, dev);
        t.rows.push_back({double(n_val), tau, dev});
      }
    }
    r.tables.push_back(std::move(t));
    r.add_check("wronskian_is_minus_2i", worst, tol, worst <= tol);
    return r;
  }

  if (mode == "residual") {
    const double tol = s.real("residual_tolerance");
    const double h = s.real("step");
    double worst = 0.0;
    Table t;
    t.name = "residuals";
    t.columns = {"n", "time_residual", "space_residual"};
    for (long n_val : n_list) {
      const ModeContext ctx(nat.qE, nat.qB, nat.m, static_cast<int>(n_val),
                            kx, ky);
      const double rt = residual_kg_time(ctx, s.real("t"), h);
      const double rz = residual_kg_space(ctx, s.real("z"), h);
      worst = std::max({worst, rt, rz});
      t.rows.push_back({double(n_val), rt, rz});
    }
    r.tables.push_back(std::move(t));
    r.add_check("separated_ode_residual", worst, tol, worst <= tol);
    return r;
  }

  if (mode == "hermite") {
    const int n_pairs = static_cast<int>(s.integer("n_pairs_max"));
    double worst_ortho = 0.0;
    for (int n = 0; n <= n_pairs; ++n) {
      for (int m_idx = n; m_idx <= n_pairs; ++m_idx) {
        const QuadratureResult q = integrate(
            [n, m_idx](double x) {
              return hermite_function(n, x) * hermite_function(m_idx, x);
            },
            -16.0, 16.0, 1e-13, 1e-13, 8);
        const double target = (n == m_idx) ? 1.0 : 0.0;
        worst_ortho = std::max(worst_ortho, std::abs(q.value - target));
      }
    }
    r.add_check("orthonormality", worst_ortho, s.real("ortho_tolerance"),
                worst_ortho <= s.real("ortho_tolerance"));

    // smeared completeness against a displaced unit-width Gaussian
    const int n_terms = static_cast<int>(s.integer("n_terms"));
    const double mu = 1.0;
    auto g = [mu](double x) { return std::exp(-0.5 * (x - mu) * (x - mu)); };
    std::vector<double> chi_col(static_cast<std::size_t>(n_terms) + 1);
    double worst_complete = 0.0;
    for (int i = 0; i <= 60; ++i) {
      const double x = -3.0 + 6.0 * i / 60.0;
      hermite_function_all(n_terms, x, chi_col);
      const QuadratureResult q = integrate(
          [&](double y) {
            std::vector<double> col(static_cast<std::size_t>(n_terms) + 1);
            hermite_function_all(n_terms, y, col);
            double k = 0.0;
            for (int n = 0; n <= n_terms; ++n) {
              k += chi_col[static_cast<std::size_t>(n)] *
                   col[static_cast<std::size_t>(n)];
            }
            return k * g(y);
          },
          -9.0, 11.0, 1e-10, 1e-10, 8);
      worst_complete = std::max(worst_complete, std::abs(q.value - g(x)));
    }
    r.add_check("smeared_completeness", worst_complete,
                s.real("completeness_tolerance"),
                worst_complete <= s.real("completeness_tolerance"));
    return r;
  }

  throw Error(ErrorCode::schema,
              "modes: mode must be evaluate, wronskian-scan, residual or "
              "hermite");
}

// ------------------------------------------------------------------- vev
Report run_vev(const Scenario& s) {
  Report r = report_skeleton(s);
  const std::string& op = s.text("operator");
  const std::string& comp_text = s.text("component");
  vev::Component comp;
  if (comp_text == "x") {
    comp = vev::Component::x;
  } else if (comp_text == "y") {
    comp = vev::Component::y;
  } else if (comp_text == "z") {
    comp = vev::Component::z;
  } else {
    throw Error(ErrorCode::schema, "vev: component must be x, y or z");
  }

  vev::ModeFamily family{s.real("qe"), s.real("qb"), s.real("mass")};
  vev::RegularizationWindow window;
  window.n_max = static_cast<int>(s.integer("n_max"));
  window.k_cut = s.real("cut");
  window.quadrature_points = static_cast<int>(s.integer("quadrature_points"));
  window.upper_scale = s.real("upper_scale");

  vev::VevResult result;
  if (op == "momentum") {
    result = vev::momentum_vev(comp, family, window);
  } else if (op == "current") {
    result = vev::current_vev(comp, family, window);
  } else {
    throw Error(ErrorCode::schema, "vev: operator must be momentum or current");
  }

  r.labels.emplace_back("mechanism", result.symbolic ? "symbolic" : "numeric");
  r.scalars.emplace_back("value", result.value);
  r.scalars.emplace_back("scale", result.scale);
  const double ratio = std::abs(result.value) / result.scale;
  r.scalars.emplace_back("value_over_scale", ratio);
  if (result.parity_asymmetry) {
    r.scalars.emplace_back("parity_asymmetry", *result.parity_asymmetry);
  }

  const double tol = s.real("tolerance");
  if (s.boolean("expect_nonzero")) {
    const double floor = s.real("nonzero_min_ratio");
    r.add_check("nonzero_under_asymmetric_window", ratio, floor,
                ratio >= floor);
  } else if (result.symbolic) {
    r.add_check("vanishes_symbolically", result.value, 0.0,
                result.value == 0.0);
  } else {
    r.add_check("vanishes_within_tolerance", ratio, tol, ratio <= tol);
  }
  return r;
}

}  // namespace

Report run_scenario(const Scenario& scenario) {
  switch (scenario.subcommand) {
    case Subcommand::drift: return run_drift(scenario);
    case Subcommand::boost: return run_boost(scenario);
    case Subcommand::colinear: return run_colinear(scenario);
    case Subcommand::push: return run_push(scenario);
    case Subcommand::schwinger: return run_schwinger(scenario);
    case Subcommand::thruster: return run_thruster(scenario);
    case Subcommand::modes: return run_modes(scenario);
    case Subcommand::vev: return run_vev(scenario);
  }
  throw Error(ErrorCode::schema, "unhandled subcommand");
}

std::vector<ScenarioOutcome> check_all(const std::string& directory) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (!fs::is_directory(directory)) {
    throw Error(ErrorCode::io, "not a directory: " + directory);
  }
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".scn") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    throw Error(ErrorCode::io, "no .scn scenarios in " + directory);
  }
  std::sort(files.begin(), files.end());

  std::vector<ScenarioOutcome> outcomes;
  for (const auto& file : files) {
    ScenarioOutcome o;
    o.file = file.filename().string();
    try {
      const Scenario scn = load_scenario(file.string());
      o.name = scn.name;
      o.pass = run_scenario(scn).pass();
    } catch (const std::exception&) {
      o.name = o.name.empty() ? "(error)" : o.name;
      o.pass = false;
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

}  // namespace qvt
