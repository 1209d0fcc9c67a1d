#include "clear/trend.hpp"

#include "clear/error.hpp"
#include "clear/limits.hpp"
#include "regression.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace clear {

std::string_view to_string(SystemClass cls)
{
    switch (cls) {
    case SystemClass::mainframe: return "mainframe";
    case SystemClass::personal: return "personal";
    case SystemClass::supercomputer: return "supercomputer";
    case SystemClass::optical_projection: return "optical_projection";
    case SystemClass::other: return "other";
    }
    return "unknown";
}

std::optional<SystemClass> parse_system_class(std::string_view text)
{
    for (auto c : {SystemClass::mainframe, SystemClass::personal, SystemClass::supercomputer,
                   SystemClass::optical_projection, SystemClass::other})
        if (text == to_string(c))
            return c;
    return std::nullopt;
}

std::string_view to_string(TrendPosition position)
{
    switch (position) {
    case TrendPosition::above: return "above";
    case TrendPosition::on: return "on";
    case TrendPosition::below: return "below";
    }
    return "unknown";
}

ClearValue system_clear(const SystemRecord& r)
{
    return compose_clear({r.mips, r.clock_period_s, r.energy_j_per_bit, r.volume_m3, r.cost_usd},
                         Level::system);
}

GrowthFit fit_growth(std::span<const SystemRecord> records)
{
    std::vector<double> years;
    std::vector<double> log_clear;
    years.reserve(records.size());
    log_clear.reserve(records.size());
    for (const auto& r : records) {
        years.push_back(r.year);
        log_clear.push_back(std::log2(system_clear(r).value));
    }
    const auto line = detail::fit_line(years, log_clear);

    GrowthFit fit{};
    fit.slope_log2_per_year = line.slope;
    fit.intercept = line.intercept;
    fit.annual_factor = std::exp2(line.slope);
    fit.doubling_months =
        line.slope == 0 ? std::numeric_limits<double>::infinity() : 12.0 / line.slope;
    fit.r_squared = line.r_squared.value_or(1.0);
    return fit;
}

double predicted_log2_clear(const GrowthFit& fit, double year)
{
    return fit.intercept + fit.slope_log2_per_year * year;
}

EfficiencyPoint efficiency_point(const SystemRecord& r, double temperature_k)
{
    system_clear(r); // validates the record
    EfficiencyPoint p{};
    p.energy_efficiency = 1.0 / r.energy_j_per_bit;
    p.computational_efficiency = 1.0 / (r.clock_period_s * r.volume_m3 * r.cost_usd);
    p.fraction_of_landauer = p.energy_efficiency * landauer_energy(temperature_k);
    return p;
}

double bit_rate(const SystemRecord& record, double bits_per_instruction)
{
    return record.mips * 1e6 * bits_per_instruction;
}

double trend_residual_db(const SystemRecord& record, const GrowthFit& fit)
{
    const double log2_residual =
        std::log2(system_clear(record).value) - predicted_log2_clear(fit, record.year);
    return 10.0 * std::log10(2.0) * log2_residual;
}

TrendPosition classify_vs_trend(const SystemRecord& record, const GrowthFit& fit, double band_db)
{
    if (!(band_db >= 0))
        throw DomainError("trend band must be >= 0 dB");
    const double residual = trend_residual_db(record, fit);
    if (residual > band_db)
        return TrendPosition::above;
    if (residual < -band_db)
        return TrendPosition::below;
    return TrendPosition::on;
}

} // namespace clear
