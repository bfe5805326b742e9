// SPDX-License-Identifier: Apache-2.0
#include "qvt/schwinger.hpp"

#include <cmath>
#include <limits>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"

namespace qvt {

namespace {

// log of the smallest positive (denormal) double; anything below gives 0.
const double kLogTiny =
    std::log(std::numeric_limits<double>::denorm_min());

void validate(const VacuumDecayQuery& q) {
  if (!(q.field >= 0.0) || !(q.mass > 0.0) || !(q.charge > 0.0) ||
      q.kmax < 1) {
    throw Error(ErrorCode::out_of_domain,
                "schwinger: need E >= 0, m > 0, q > 0, kmax >= 1");
  }
}

double rate_sum(const VacuumDecayQuery& q, int kmax) {
  using constants::c;
  using constants::hbar;
  using constants::pi;

  if (q.field == 0.0) return 0.0;

  const double log_pref = 2.0 * std::log(q.charge * q.field) -
                          std::log(pi * pi * hbar * hbar * c);
  // exponent of the k-th term: -k * pi * m^2 c^3 / (hbar q E)
  const double x = pi * q.mass * q.mass * c * c * c / (hbar * q.charge * q.field);

  double sum = 0.0;
  for (int k = kmax; k >= 1; --k) {  // ascending magnitude
    const double log_term = log_pref - k * x - 2.0 * std::log(double(k));
    if (log_term < kLogTiny) continue;
    sum += std::exp(log_term);
  }
  return sum;
}

}  // namespace

double pair_production_rate(const VacuumDecayQuery& query) {
  validate(query);
  return rate_sum(query, query.kmax);
}

double dominant_term_rate(const VacuumDecayQuery& query) {
  validate(query);
  return rate_sum(query, 1);
}

double critical_field(double mass, double charge) {
  using constants::c;
  using constants::hbar;
  if (!(mass > 0.0) || !(charge > 0.0)) {
    throw Error(ErrorCode::out_of_domain,
                "critical_field: need m > 0 and q > 0");
  }
  return mass * mass * c * c * c / (hbar * charge);
}

}  // namespace qvt
