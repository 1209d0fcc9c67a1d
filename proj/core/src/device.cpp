#include "clear/device.hpp"

#include "clear/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace clear {

Factors device_factors(const DeviceSpec& spec, std::optional<double> eval_year)
{
    return {spec.capability_hz, spec.critical_length_m, spec.energy_j_per_bit, spec.footprint_m2,
            cost_at(spec.unit_cost_usd, spec.cost_trend, eval_year)};
}

ClearValue device_clear(const DeviceSpec& spec, std::optional<double> eval_year)
{
    return compose_clear(device_factors(spec, eval_year), Level::device);
}

std::vector<std::string> limit_violations(const DeviceSpec& spec, const LimitSet& limits)
{
    std::vector<std::string> out;
    if (spec.energy_j_per_bit < limits.min_energy_j_per_bit)
        out.emplace_back("energy_j_per_bit below the Landauer bound");
    if (spec.capability_hz > limits.max_rate_hz)
        out.emplace_back("capability_hz above the Margolus-Levitin rate");
    if (spec.critical_length_m < limits.min_length_m)
        out.emplace_back("critical_length_m below the Heisenberg length");
    if (spec.footprint_m2 < limits.min_area_m2)
        out.emplace_back("footprint_m2 below the minimum area");
    if (spec.unit_cost_usd > 0 && 1.0 / spec.unit_cost_usd > limits.cost_efficiency_axis)
        out.emplace_back("unit_cost_usd beyond the cost-efficiency axis");
    return out;
}

AxisValues efficiency_orientation(const Factors& f)
{
    return {f.capability, 1.0 / f.latency, 1.0 / f.energy, 1.0 / f.amount, 1.0 / f.resistance};
}

AxisValues radar_ceilings(const LimitSet& limits)
{
    if (limits.level == Level::link)
        return {limits.max_capacity_bps, limits.max_tof_rate_hz, 1.0 / limits.min_energy_j_per_bit,
                1.0 / limits.min_area_m2, limits.cost_efficiency_axis};
    return {limits.max_rate_hz, 1.0 / limits.min_length_m, 1.0 / limits.min_energy_j_per_bit,
            1.0 / limits.min_area_m2, limits.cost_efficiency_axis};
}

RadarScores radar_normalize(const AxisValues& efficiency, const AxisValues& ceilings,
                            const AxisValues& floors)
{
    RadarScores out{};
    out.floors = floors;
    out.ceilings = ceilings;
    for (std::size_t i = 0; i < axis_count; ++i) {
        if (!(floors[i] > 0) || !(floors[i] < ceilings[i]))
            throw ConfigError("radar floor must be positive and below the ceiling on axis '" +
                              std::string(to_string(all_axes[i])) + "'");
        const double s = std::log10(efficiency[i] / floors[i]) / std::log10(ceilings[i] / floors[i]);
        out.scores[i] = std::clamp(s, 0.0, 1.0);
    }
    return out;
}

RadarScores radar_normalize(const Factors& factors, const LimitSet& limits,
                            const AxisValues& floors)
{
    return radar_normalize(efficiency_orientation(factors), radar_ceilings(limits), floors);
}

AxisValues default_floors(std::span<const Factors> candidates, double margin)
{
    if (candidates.empty())
        throw ConfigError("default_floors: no candidates");
    if (!(margin > 1))
        throw ConfigError("default_floors: margin must exceed 1");
    AxisValues worst = efficiency_orientation(candidates.front());
    for (const auto& f : candidates.subspan(1)) {
        const auto e = efficiency_orientation(f);
        for (std::size_t i = 0; i < axis_count; ++i)
            worst[i] = std::min(worst[i], e[i]);
    }
    for (auto& w : worst)
        w /= margin;
    return worst;
}

AxisValues default_floors(std::span<const Factors> candidates, const AxisValues& ceilings,
                          double margin)
{
    auto floors = default_floors(candidates, margin);
    for (std::size_t i = 0; i < axis_count; ++i)
        floors[i] = std::min(floors[i], ceilings[i] / margin);
    return floors;
}

double radar_area(const RadarScores& radar)
{
    const auto& s = radar.scores;
    double sum = 0;
    for (std::size_t i = 0; i < axis_count; ++i)
        sum += s[i] * s[(i + 1) % axis_count];
    return 0.5 * std::sin(2.0 * std::numbers::pi / axis_count) * sum;
}

std::vector<std::pair<double, double>> radar_polygon(const RadarScores& radar)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(axis_count);
    for (std::size_t i = 0; i < axis_count; ++i) {
        const double angle = std::numbers::pi / 2 - 2.0 * std::numbers::pi * i / axis_count;
        out.emplace_back(radar.scores[i] * std::cos(angle), radar.scores[i] * std::sin(angle));
    }
    return out;
}

} // namespace clear
