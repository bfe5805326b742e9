// SPDX-License-Identifier: Apache-2.0
#include "qvt/vev.hpp"

#include <cmath>
#include <map>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"
#include "qvt/hermite.hpp"
#include "qvt/modes.hpp"
#include "qvt/quadrature.hpp"

namespace qvt::vev {

namespace {

using cplx = std::complex<double>;
using constants::pi;

constexpr double kVevTolerance = 1e-8;

ModeContext context_for(const ModeFamily& fam, int n) {
  return ModeContext(fam.qE, fam.qB, fam.m, n, 0.0, 0.0);
}

struct WindowIntegral {
  double value = 0.0;
  double scale = 0.0;
};

/// Integrate f and |f| over the window range with a deterministic
/// two-pass scheme: the L1 size first, then the signed integral with an
/// absolute tolerance tied to it.  No symmetry is assumed anywhere; a
/// vanishing result has to emerge from the quadrature itself.
WindowIntegral integrate_window(const std::function<double(double)>& f,
                                const RegularizationWindow& w) {
  const double lo = -w.k_cut;
  const double hi = w.upper_scale * w.k_cut;
  const int panels = std::max(1, w.quadrature_points / 15);

  WindowIntegral out;
  const QuadratureResult mag = integrate(
      [&f](double x) { return std::abs(f(x)); }, lo, hi, 1e-300, 1e-9,
      panels);
  out.scale = mag.value;
  const double abs_tol = std::max(1e-12 * out.scale, 1e-300);
  const QuadratureResult val =
      integrate(f, lo, hi, abs_tol, 1e-9, panels);
  out.value = val.value;
  return out;
}

VevResult make_symbolic_zero(const std::string& op, Component component,
                             const VacuumExpectation& vev) {
  VevResult r;
  r.operator_name = op;
  r.component = component;
  r.symbolic = true;
  r.value = std::abs(vev.scalar);
  for (const auto& d : vev.deltas) r.value += std::abs(d.coefficient);
  r.scale = 1.0;
  r.tolerance = 0.0;
  r.pass = vev.is_zero();
  return r;
}

}  // namespace

bool VacuumExpectation::is_zero() const {
  if (scalar != 0.0) return false;
  for (const auto& d : deltas) {
    if (d.coefficient != 0.0) return false;
  }
  return true;
}

OperatorSymbol a(std::string label) {
  return {Species::particle, Ladder::annihilate, std::move(label)};
}
OperatorSymbol adag(std::string label) {
  return {Species::particle, Ladder::create, std::move(label)};
}
OperatorSymbol b(std::string label) {
  return {Species::antiparticle, Ladder::annihilate, std::move(label)};
}
OperatorSymbol bdag(std::string label) {
  return {Species::antiparticle, Ladder::create, std::move(label)};
}

VacuumExpectation vacuum_expectation(const OperatorExpression& expr) {
  VacuumExpectation out;
  out.scalar = 0.0;
  // accumulate per label pair so that opposite terms cancel exactly
  std::map<std::pair<std::string, std::string>, cplx> acc;

  for (const auto& term : expr.terms) {
    if (term.factors.size() > 2) {
      throw Error(ErrorCode::unsupported_arity,
                  "vacuum_expectation: engine is bilinear (<= 2 factors)");
    }
    if (term.factors.empty()) {
      out.scalar += term.coefficient;  // <0|0> = 1
      continue;
    }
    if (term.factors.size() == 1) continue;  // <0|a|0> = <0|a^dag|0> = 0

    const auto& first = term.factors[0];
    const auto& second = term.factors[1];
    const bool contracts = first.ladder == Ladder::annihilate &&
                           second.ladder == Ladder::create &&
                           first.species == second.species;
    if (!contracts) continue;
    const double norm = (2.0 * pi) * (2.0 * pi);
    acc[{first.label, second.label}] += norm * term.coefficient;
  }

  for (const auto& [labels, coeff] : acc) {
    if (coeff == 0.0) continue;
    out.deltas.push_back({coeff, labels.first, labels.second});
  }
  return out;
}

VevResult momentum_vev(Component component, const ModeFamily& family,
                       const RegularizationWindow& window) {
  if (window.n_max < 0 || !(window.k_cut > 0.0) ||
      window.quadrature_points < 16) {
    throw Error(ErrorCode::out_of_domain,
                "momentum_vev: invalid regularization window");
  }

  if (component == Component::x || component == Component::y) {
    // The transverse components reduce to the bracket
    // [b_k b_k'^dag - a_k a_k'^dag] with one shared c-number weight.
    const ModeContext ctx = context_for(family, 0);
    const ModeValue phi0 = phi_mode(ctx, 0.0);
    const cplx weight = cplx(0.0, 1.0) * hermite_function(0, 1.0) *
                        hermite_function(0, 1.0) *
                        std::conj(phi0.derivative) * phi0.value;
    OperatorExpression expr;
    expr.terms.push_back({weight, {b("k"), bdag("k'")}});
    expr.terms.push_back({-weight, {a("k"), adag("k'")}});
    return make_symbolic_zero("momentum", component,
                              vacuum_expectation(expr));
  }

  // P^z: sum_n integral of chi_n d(chi_n)/dkbar over the window.
  VevResult r;
  r.operator_name = "momentum";
  r.component = Component::z;
  double value = 0.0, scale = 0.0;
  for (int n = 0; n <= window.n_max; ++n) {
    const WindowIntegral part = integrate_window(
        [n](double k) {
          return hermite_function(n, k) * hermite_function_derivative(n, k);
        },
        window);
    value += part.value;
    scale += part.scale;
  }
  r.value = value;
  r.scale = std::max(scale, 1e-300);
  r.tolerance = kVevTolerance;
  r.pass = std::abs(r.value) < r.tolerance * r.scale;
  return r;
}

VevResult current_vev(Component component, const ModeFamily& family,
                      const RegularizationWindow& window) {
  if (window.n_max < 0 || !(window.k_cut > 0.0) ||
      window.quadrature_points < 16) {
    throw Error(ErrorCode::out_of_domain,
                "current_vev: invalid regularization window");
  }

  if (component == Component::z) {
    // J^z carries (d chi/dz) chi - chi (d chi/dz): the two contractions
    // have identical c-number weights and cancel before any integral.
    const ModeContext ctx = context_for(family, 0);
    const double chi = hermite_function(ctx.n(), 0.7);
    const double dchi = hermite_function_derivative(ctx.n(), 0.7);
    const ModeValue phi0 = phi_mode(ctx, 0.0);
    const double density = std::norm(phi0.value);
    const cplx iq(0.0, 1.0);
    OperatorExpression expr;
    expr.terms.push_back({iq * dchi * chi * density, {b("k"), bdag("k'")}});
    expr.terms.push_back({-iq * chi * dchi * density, {b("k"), bdag("k'")}});
    return make_symbolic_zero("current", component,
                              vacuum_expectation(expr));
  }

  VevResult r;
  r.operator_name = "current";
  r.component = component;
  r.tolerance = kVevTolerance;

  if (component == Component::x) {
    // J^x: qB sum_n integral of chi_n(kbar)^2 kbar.
    double value = 0.0, scale = 0.0;
    for (int n = 0; n <= window.n_max; ++n) {
      const WindowIntegral part = integrate_window(
          [n](double k) {
            const double chi = hermite_function(n, k);
            return chi * chi * k;
          },
          window);
      value += part.value;
      scale += part.scale;
    }
    r.value = family.qB * value;
    r.scale = std::max(family.qB * scale, 1e-300);
    r.pass = std::abs(r.value) < r.tolerance * r.scale;
    return r;
  }

  // J^y: (qE/2) sum_n integral of |phi_n(tau)|^2 tau.  The cancellation
  // requires |phi_n|^2 to be even in tau, which is not an algebraic
  // identity; the parity asymmetry is measured and reported.
  double value = 0.0, scale = 0.0;
  double asym_num = 0.0, asym_den = 0.0;
  for (int n = 0; n <= window.n_max; ++n) {
    const ModeContext ctx = context_for(family, n);
    const WindowIntegral part = integrate_window(
        [&ctx](double tau) { return std::norm(phi_mode(ctx, tau).value) * tau; },
        window);
    value += part.value;
    scale += part.scale;

    const int samples = 64;
    for (int i = 1; i <= samples; ++i) {
      const double tau = window.k_cut * i / samples;
      const double rp = std::norm(phi_mode(ctx, tau).value);
      const double rm = std::norm(phi_mode(ctx, -tau).value);
      asym_num += std::abs(rp - rm);
      asym_den += rp + rm;
    }
  }
  r.value = 0.5 * family.qE * value;
  r.scale = std::max(0.5 * family.qE * scale, 1e-300);
  r.pass = std::abs(r.value) < r.tolerance * r.scale;
  r.parity_asymmetry = asym_num / std::max(asym_den, 1e-300);
  return r;
}

}  // namespace qvt::vev
