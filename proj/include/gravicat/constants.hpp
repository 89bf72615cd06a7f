#pragma once

#include <numbers>

namespace gravicat {

/// Physical constants used throughout the library, SI units.
///
/// Values are CODATA 2018 (h and k_B are exact in the 2019 SI).
/// The nucleon radius parameter R0 entering a = A^(1/3) R0 is fixed
/// at 0.9 fm. Literature estimates often round the atomic mass unit
/// to 1.7e-27 kg; the full-precision CODATA value is used here and
/// agrees with that rounding to ~2%.
struct PhysicalConstants {
  double G;     // gravitational constant, m^3 kg^-1 s^-2
  double c;     // speed of light, m s^-1
  double hbar;  // reduced Planck constant, J s
  double h;     // Planck constant, J s
  double k_B;   // Boltzmann constant, J K^-1
  double m_u;   // atomic mass unit, kg
  double R0;    // nucleon radius parameter, m
};

constexpr PhysicalConstants kConstants{
    6.67430e-11,
    299792458.0,
    6.62607015e-34 / (2.0 * std::numbers::pi),
    6.62607015e-34,
    1.380649e-23,
    1.66053906660e-27,
    0.9e-15,
};

/// The canonical constant table.
constexpr const PhysicalConstants& constants() { return kConstants; }

}  // namespace gravicat
