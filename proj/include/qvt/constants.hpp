// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qvt::constants {

// CODATA 2018.  c, h-bar and the elementary charge are exact under the
// 2019 SI redefinition; the electron mass is the recommended value.
inline constexpr double c = 299792458.0;                    // speed of light [m/s]
inline constexpr double c2 = c * c;                         // [m^2/s^2]
inline constexpr double hbar = 1.054571817e-34;             // reduced Planck constant [J s]
inline constexpr double elementary_charge = 1.602176634e-19;  // [C]
inline constexpr double electron_mass = 9.1093837015e-31;   // [kg]

inline constexpr double pi = 3.14159265358979323846;

}  // namespace qvt::constants
