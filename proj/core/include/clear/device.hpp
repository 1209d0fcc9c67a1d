#pragma once

#include "clear/economics.hpp"
#include "clear/limits.hpp"
#include "clear/metric.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clear {

struct DeviceSpec
{
    std::string name;
    Technology technology = Technology::electronic;
    double capability_hz = 0;     // operating frequency
    double critical_length_m = 0; // gate length, ring diameter, active side...
    double energy_j_per_bit = 0;
    double footprint_m2 = 0;
    double unit_cost_usd = 0;
    std::optional<CostTrend> cost_trend;
};

Factors device_factors(const DeviceSpec& spec, std::optional<double> eval_year = std::nullopt);

/// Device-level CLEAR: capability / (length * energy * area * cost).
ClearValue device_clear(const DeviceSpec& spec, std::optional<double> eval_year = std::nullopt);

/// Factors that beat their physical ceiling. Reported, never clamped.
std::vector<std::string> limit_violations(const DeviceSpec& spec, const LimitSet& limits);

/// Factors re-oriented so that larger is better on every axis:
/// {C, 1/L, 1/E, 1/A, 1/R}.
AxisValues efficiency_orientation(const Factors& factors);

/// Radar ceilings of a limit set, in efficiency orientation. The latency
/// axis uses the inverse minimum length at device level and the
/// time-of-flight rate at link level; the capability axis uses the
/// Margolus-Levitin rate and the Bremermann capacity respectively.
AxisValues radar_ceilings(const LimitSet& limits);

struct RadarScores
{
    AxisValues scores;   // each in [0, 1]
    AxisValues floors;   // efficiency orientation
    AxisValues ceilings; // efficiency orientation
};

/// Log-scale normalisation per axis:
///   clamp(log10(x / floor) / log10(ceiling / floor), 0, 1).
/// Throws ConfigError when floor >= ceiling on any axis.
RadarScores radar_normalize(const AxisValues& efficiency, const AxisValues& ceilings,
                            const AxisValues& floors);

RadarScores radar_normalize(const Factors& factors, const LimitSet& limits,
                            const AxisValues& floors);

/// Default per-axis floors: worst efficiency among `candidates` divided by
/// `margin`.
AxisValues default_floors(std::span<const Factors> candidates, double margin = 10.0);

/// As above, but never closer than `margin` below `ceilings`, so a candidate
/// that beats its ceiling still gets a usable axis (and scores 1).
AxisValues default_floors(std::span<const Factors> candidates, const AxisValues& ceilings,
                          double margin = 10.0);

/// Pentagon area with the scores as radii at 72 degree spacing, axis order
/// C, L, E, A, R. Depends on the axis order.
double radar_area(const RadarScores& radar);

/// Pentagon vertices (x, y) in axis order, first axis on +y.
std::vector<std::pair<double, double>> radar_polygon(const RadarScores& radar);

} // namespace clear
