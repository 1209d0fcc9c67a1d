#pragma once

#include "clear/metric.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace clear {

enum class SystemClass
{
    mainframe,
    personal,
    supercomputer,
    optical_projection,
    other,
};

std::string_view to_string(SystemClass cls);
std::optional<SystemClass> parse_system_class(std::string_view text);

struct SystemRecord
{
    std::string name;
    double year = 0;
    double mips = 0; // instruction-length weighted
    double clock_period_s = 0;
    double energy_j_per_bit = 0;
    double volume_m3 = 0;
    double cost_usd = 0;
    SystemClass system_class = SystemClass::other;
};

/// Bits carried by one weighted instruction.
inline constexpr double default_bits_per_instruction = 32.0;

ClearValue system_clear(const SystemRecord& record);

struct GrowthFit
{
    double slope_log2_per_year;
    double intercept; // log2 CLEAR at year 0
    double annual_factor;
    double doubling_months;
    double r_squared;
};

/// OLS of log2(system_clear) against year.
GrowthFit fit_growth(std::span<const SystemRecord> records);

double predicted_log2_clear(const GrowthFit& fit, double year);

struct EfficiencyPoint
{
    double computational_efficiency; // 1 / (s * m^3 * USD)
    double energy_efficiency;        // bit / J
    double fraction_of_landauer;
};

EfficiencyPoint efficiency_point(const SystemRecord& record, double temperature_k = 300.0);

/// Instruction throughput in bit/s: MIPS * 1e6 * bits per instruction.
double bit_rate(const SystemRecord& record,
                double bits_per_instruction = default_bits_per_instruction);

enum class TrendPosition
{
    above,
    on,
    below,
};

std::string_view to_string(TrendPosition position);

/// Half a decade either side of the line.
inline constexpr double default_trend_band_db = 5.0;

/// Residual 10 log10(actual / predicted) against +-band_db.
TrendPosition classify_vs_trend(const SystemRecord& record, const GrowthFit& fit,
                                double band_db = default_trend_band_db);

double trend_residual_db(const SystemRecord& record, const GrowthFit& fit);

} // namespace clear
