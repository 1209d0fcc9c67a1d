#pragma once

#include "clear/constants.hpp"

#include <string_view>

namespace clear {

/// Hierarchy level a CLEAR value or limit set refers to.
enum class Level
{
    device,
    link,
    network,
    system,
};

std::string_view to_string(Level level);

/// Cost-efficiency ceiling in 1/USD. Not a physical bound; configurable.
inline constexpr double default_cost_efficiency_axis = 1e10;

/// Minimum energy to erase one bit, k_B T ln 2.
double landauer_energy(double temperature_k, const PhysicalConstants& pc = codata2018);

/// Maximum state-transition rate 4E/h for a system holding energy E.
double margolus_levitin_rate(double energy_j, const PhysicalConstants& pc = codata2018);

/// Minimum localisation length hbar / sqrt(2 m k_B T ln 2).
double heisenberg_min_length(double temperature_k, double mass_kg,
                             const PhysicalConstants& pc = codata2018);

/// Maximum bit rate m c^2 / h carried by a system of the given mass.
double bremermann_rate(double mass_kg, const PhysicalConstants& pc = codata2018);

/// Rate ceiling c / (n_g L) set by propagation time along a link.
double time_of_flight_rate_limit(double length_m, double group_index,
                                 const PhysicalConstants& pc = codata2018);

/// Mass of a crystalline silicon cube of the given side.
double silicon_cube_mass(double side_m, const PhysicalConstants& pc = codata2018);

/// Per-factor physical ceilings used to normalise radar axes.
struct LimitSet
{
    double min_energy_j_per_bit;
    double max_rate_hz;
    double min_length_m;
    double min_area_m2;
    double max_capacity_bps;
    double max_tof_rate_hz;
    double cost_efficiency_axis; // 1/USD
    Level level;
};

/// Builds the limit set for a device or a link.
///
/// Device level: energy is the Landauer bound, rate is Margolus-Levitin at
/// that energy, length is the Heisenberg length for `mass_kg` and area is its
/// square. Link level doubles the energy and area (a bit is handled at both
/// the sender and the receiver) and the capacity ceiling is the Bremermann
/// rate of two minimum-size silicon cubes. Device-level capacity uses a
/// single cube. Both levels carry the time-of-flight ceiling of `link_length_m`.
///
/// Throws DomainError for `network`/`system` levels or invalid inputs.
LimitSet make_limit_set(double temperature_k, double mass_kg, double link_length_m,
                        double group_index, Level level,
                        double cost_efficiency_axis = default_cost_efficiency_axis,
                        const PhysicalConstants& pc = codata2018);

} // namespace clear
