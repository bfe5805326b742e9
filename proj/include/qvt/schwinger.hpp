// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qvt {

/// Inputs for the vacuum pair-production rate.  SI units.
struct VacuumDecayQuery {
  double field = 0.0;    // electric field magnitude [V/m], >= 0
  double mass = 0.0;     // particle mass [kg], > 0
  double charge = 0.0;   // charge magnitude [C], > 0
  int kmax = 20;         // series truncation, >= 1
};

/// Pair production rate per unit volume and time [pairs / (m^3 s)]:
///   w = (q^2 E^2 / pi^2 hbar^2 c) * sum_{k=1..kmax} k^-2 exp(-k pi m^2 c^3 / (hbar q E))
/// Evaluated in the log domain; exponents below the smallest positive
/// double underflow to exactly 0.  E = 0 returns exactly 0.
double pair_production_rate(const VacuumDecayQuery& query);

/// The k = 1 term of the series alone.
double dominant_term_rate(const VacuumDecayQuery& query);

/// Field at which the exponential suppression reaches e^-pi:
///   E_c = m^2 c^3 / (hbar q).
double critical_field(double mass, double charge);

}  // namespace qvt
