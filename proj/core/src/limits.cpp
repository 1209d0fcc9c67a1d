#include "clear/limits.hpp"

#include "clear/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace clear {

std::string_view to_string(Level level)
{
    switch (level) {
    case Level::device: return "device";
    case Level::link: return "link";
    case Level::network: return "network";
    case Level::system: return "system";
    }
    return "unknown";
}

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw DomainError(what);
}

} // namespace

double landauer_energy(double temperature_k, const PhysicalConstants& pc)
{
    require(std::isfinite(temperature_k) && temperature_k >= 0,
            "landauer_energy: temperature must be >= 0 K");
    return pc.boltzmann_k * temperature_k * std::numbers::ln2;
}

double margolus_levitin_rate(double energy_j, const PhysicalConstants& pc)
{
    require(std::isfinite(energy_j) && energy_j > 0,
            "margolus_levitin_rate: energy must be > 0");
    return 4.0 * energy_j / pc.planck_h;
}

double heisenberg_min_length(double temperature_k, double mass_kg, const PhysicalConstants& pc)
{
    require(std::isfinite(temperature_k) && temperature_k > 0,
            "heisenberg_min_length: temperature must be > 0 K");
    require(std::isfinite(mass_kg) && mass_kg > 0, "heisenberg_min_length: mass must be > 0");
    return pc.reduced_planck / std::sqrt(2.0 * mass_kg * landauer_energy(temperature_k, pc));
}

double bremermann_rate(double mass_kg, const PhysicalConstants& pc)
{
    require(std::isfinite(mass_kg) && mass_kg > 0, "bremermann_rate: mass must be > 0");
    const double c = pc.light_speed_vacuum;
    return mass_kg * c * c / pc.planck_h;
}

double time_of_flight_rate_limit(double length_m, double group_index, const PhysicalConstants& pc)
{
    require(std::isfinite(length_m) && length_m > 0,
            "time_of_flight_rate_limit: length must be > 0");
    require(std::isfinite(group_index) && group_index >= 1,
            "time_of_flight_rate_limit: group index must be >= 1");
    return pc.light_speed_vacuum / (group_index * length_m);
}

double silicon_cube_mass(double side_m, const PhysicalConstants& pc)
{
    require(std::isfinite(side_m) && side_m > 0, "silicon_cube_mass: side must be > 0");
    return pc.silicon_density * side_m * side_m * side_m;
}

LimitSet make_limit_set(double temperature_k, double mass_kg, double link_length_m,
                        double group_index, Level level, double cost_efficiency_axis,
                        const PhysicalConstants& pc)
{
    if (level != Level::device && level != Level::link)
        throw DomainError("make_limit_set: only device and link levels have physical limits, got " +
                          std::string(to_string(level)));
    require(std::isfinite(cost_efficiency_axis) && cost_efficiency_axis > 0,
            "make_limit_set: cost efficiency axis must be > 0");

    const double energy = landauer_energy(temperature_k, pc);
    const double length = heisenberg_min_length(temperature_k, mass_kg, pc);
    const double cube = silicon_cube_mass(length, pc);

    LimitSet set{};
    set.level = level;
    set.max_rate_hz = margolus_levitin_rate(energy, pc);
    set.min_length_m = length;
    set.max_tof_rate_hz = time_of_flight_rate_limit(link_length_m, group_index, pc);
    set.cost_efficiency_axis = cost_efficiency_axis;
    if (level == Level::device) {
        set.min_energy_j_per_bit = energy;
        set.min_area_m2 = length * length;
        set.max_capacity_bps = bremermann_rate(cube, pc);
    } else {
        // sender and receiver each handle the bit once
        set.min_energy_j_per_bit = 2.0 * energy;
        set.min_area_m2 = 2.0 * (length * length);
        set.max_capacity_bps = bremermann_rate(2.0 * cube, pc);
    }
    return set;
}

} // namespace clear
