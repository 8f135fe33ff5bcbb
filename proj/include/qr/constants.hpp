#pragma once

#include <numbers>

namespace qr {

// SI values. planck_h is exact by definition since the 2019 redefinition;
// hbar is derived from it so the pair stays consistent to double rounding.
inline constexpr double planck_h = 6.62607015e-34;           // J s
inline constexpr double hbar = planck_h / (2.0 * std::numbers::pi); // J s
inline constexpr double electron_mass = 9.1093837015e-31;    // kg
inline constexpr double atomic_mass_unit = 1.66053906892e-27; // kg
inline constexpr double bohr_magneton = 9.2740100783e-24;    // J/T
inline constexpr double boltzmann_k = 1.380649e-23;          // J/K
inline constexpr double light_speed = 299792458.0;           // m/s
inline constexpr double electron_volt = 1.602176634e-19;     // J

} // namespace qr
