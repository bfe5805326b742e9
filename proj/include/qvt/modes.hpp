// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "qvt/hermite.hpp"

namespace qvt {

inline constexpr double max_abs_tau = 50.0;

/// Natural-unit parameters (hbar = c = 1) of one charged-scalar mode in
/// parallel electric and magnetic fields, plus the derived quantities of
/// the separated equations.  qE and qB carry dimension mass^2.
class ModeContext {
 public:
  ModeContext(double qE, double qB, double m, int n, double kx, double ky);

  double qE() const { return qE_; }
  double qB() const { return qB_; }
  double m() const { return m_; }
  int n() const { return n_; }
  double kx() const { return kx_; }
  double ky() const { return ky_; }

  double beta() const { return beta_; }    // (2n+1) qB
  double a() const { return a_; }          // -(m^2 + beta)/(2 qE) < 0
  double delta() const { return delta_; }  // arg Gamma(1/2 + i a), (-pi, pi]

 private:
  double qE_, qB_, m_;
  int n_;
  double kx_, ky_;
  double beta_, a_, delta_;
};

/// xi = sqrt(1/qB) (kx + qB z)
double xi_of(const ModeContext& ctx, double z);

/// tau = sqrt(2/qE) (ky + qE t);  d tau / d t = sqrt(2 qE)
double tau_of(const ModeContext& ctx, double t);

/// Transverse mode chi_n = (qB)^{1/4} (2^n n! sqrt(pi))^{-1/2} e^{-xi^2/2} H_n(xi).
double hermite_mode(const ModeContext& ctx, double xi);

struct ModeValue {
  std::complex<double> value;
  std::complex<double> derivative;  // d/d tau
  double est_rel_error = 0.0;
};

/// Temporal mode
///   phi_n(tau) = sqrt(2) e^{pi a/4 + i pi/2 + i delta/2} D_{-i a - 1/2}(tau e^{-i pi/4}),
/// normalized so that the tau-Wronskian with its conjugate is exactly -2i
/// for every (qE, qB, m, n).  Multiply by field_normalization() to get the
/// expansion coefficient normalization under which the equal-time field
/// commutator comes out canonical.
/// Evaluated by propagating the oscillator form of the temporal equation
/// from the exact log-domain seed at tau = 0; value and derivative come
/// from the same integration state.
ModeValue phi_mode(const ModeContext& ctx, double tau);

/// The conjugate solution, propagated independently from the conjugated
/// seed (not computed as conj(phi_mode)).
ModeValue phi_mode_conj(const ModeContext& ctx, double tau);

/// 1 / (sqrt(2) (2 qE)^{1/4}).
double field_normalization(const ModeContext& ctx);

/// W = phi d(phi*)/d tau - phi* d(phi)/d tau, from the carried derivatives.
std::complex<double> wronskian(const ModeContext& ctx, double tau);

/// Max of the two separated-equation residuals at (t, z), each evaluated
/// with a centered 4th-order five-point stencil of step h and normalized
/// by the local solution scale.
double residual_kg_time(const ModeContext& ctx, double t, double h);
double residual_kg_space(const ModeContext& ctx, double z, double h);
double residual_kg(const ModeContext& ctx, double t, double z);

}  // namespace qvt
