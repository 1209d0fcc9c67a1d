#pragma once

#include <numbers>

namespace clear {

struct PhysicalConstants
{
    double boltzmann_k;        // J/K
    double planck_h;           // J*s
    double reduced_planck;     // J*s
    double light_speed_vacuum; // m/s
    double electron_mass;      // kg
    double silicon_density;    // kg/m^3, crystalline Si
};

/// CODATA 2018 exact/recommended values.
inline constexpr PhysicalConstants codata2018{
    .boltzmann_k = 1.380649e-23,
    .planck_h = 6.62607015e-34,
    .reduced_planck = 6.62607015e-34 / (2.0 * std::numbers::pi),
    .light_speed_vacuum = 299792458.0,
    .electron_mass = 9.1093837015e-31,
    .silicon_density = 2330.0,
};

} // namespace clear
