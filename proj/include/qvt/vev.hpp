// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qvt::vev {

// ---------------------------------------------------------------------
// Symbolic bilinear engine
// ---------------------------------------------------------------------

enum class Species { particle, antiparticle };
enum class Ladder { annihilate, create };

struct OperatorSymbol {
  Species species = Species::particle;
  Ladder ladder = Ladder::annihilate;
  std::string label;  // mode label (n, kx, ky) kept symbolic
};

struct OperatorTerm {
  std::complex<double> coefficient;
  std::vector<OperatorSymbol> factors;  // at most 2
};

struct OperatorExpression {
  std::vector<OperatorTerm> terms;
};

/// One contraction result: coefficient * (2 pi)^2 delta_{nm}
/// delta(kx - kx') delta(ky - ky') between the two labels.
struct DeltaTerm {
  std::complex<double> coefficient;
  std::string left, right;
};

struct VacuumExpectation {
  std::complex<double> scalar;   // pure c-number part
  std::vector<DeltaTerm> deltas;  // distributional part
  bool is_zero() const;
};

/// <0| expr |0> for bilinears: <0| a a'^dag |0> = <0| b b'^dag |0> =
/// (2 pi)^2 delta(k, k'), every other ordering or species pairing is 0.
/// Terms with more than two factors raise unsupported_arity.
VacuumExpectation vacuum_expectation(const OperatorExpression& expr);

// convenience constructors
OperatorSymbol a(std::string label);
OperatorSymbol adag(std::string label);
OperatorSymbol b(std::string label);
OperatorSymbol bdag(std::string label);

// ---------------------------------------------------------------------
// Numerical vacuum expectation values of P^j and J^j
// ---------------------------------------------------------------------

/// Natural-unit field family shared by all modes in a sum.
struct ModeFamily {
  double qE = 1.0;
  double qB = 1.0;
  double m = 0.0;
};

/// Finite evaluation window: Landau indices n <= n_max, shifted momentum
/// (or tau) on [-k_cut, upper_scale * k_cut].  upper_scale = 1 is the
/// symmetric window of the cancellation arguments; anything else is a
/// control that breaks it.
struct RegularizationWindow {
  int n_max = 4;
  double k_cut = 8.0;
  int quadrature_points = 16;
  double upper_scale = 1.0;

  bool symmetric() const { return upper_scale == 1.0; }
};

enum class Component { x, y, z };

struct VevResult {
  std::string operator_name;  // "momentum" / "current"
  Component component;
  bool symbolic = false;  // true: exact operator-algebra zero
  double value = 0.0;
  double scale = 1.0;   // L1 size of the integrand, the "would-be" magnitude
  double tolerance = 1e-8;
  bool pass = false;    // |value| < tolerance * scale
  std::optional<double> parity_asymmetry;  // J^y diagnostic
};

/// <0|P^j|0>.  x and y vanish exactly by the [b b'^dag - a a'^dag]
/// bracket; z integrates sum_n of chi_n d(chi_n)/dk over the window.
VevResult momentum_vev(Component component, const ModeFamily& family,
                       const RegularizationWindow& window);

/// <0|J^j|0>.  z vanishes exactly (equal and opposite contractions);
/// x integrates qB sum_n of chi_n^2 kbar; y integrates (qE/2) sum_n of
/// |phi_n(tau)|^2 tau and reports the measured parity asymmetry of
/// |phi_n|^2 alongside the value.
VevResult current_vev(Component component, const ModeFamily& family,
                      const RegularizationWindow& window);

}  // namespace qvt::vev
