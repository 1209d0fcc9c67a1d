#pragma once

#include <optional>
#include <span>

namespace clear {

/// Time-parameterised experience curve: unit cost halves every
/// `halving_period` years after `reference_time`.
///
/// An infinite halving period denotes a flat curve.
struct ExperienceCurve
{
    double initial_unit_cost; // USD at reference_time
    double halving_period;    // years, > 0 (may be +inf)
    double reference_time;    // calendar year
};

/// Throws DomainError when the curve breaks its invariants.
void validate(const ExperienceCurve& curve);

double unit_cost(const ExperienceCurve& curve, double time);

struct CostObservation
{
    double year;
    double cost_usd;
};

struct ExperienceFit
{
    ExperienceCurve curve;
    /// Unset when the observed costs carry no variance.
    std::optional<double> r_squared;
};

/// Ordinary least squares of log2(cost) on year.
///
/// The curve is anchored at `reference_time` when given, otherwise at the
/// earliest observed year. A zero slope yields halving_period = +inf.
/// Throws InsufficientDataError with fewer than two distinct years,
/// DomainError for non-positive costs or for costs that rise over time.
ExperienceFit fit_experience_curve(std::span<const CostObservation> observations,
                                   std::optional<double> reference_time = std::nullopt);

/// Learning trend attached to a priced item whose cost is known at one year.
struct CostTrend
{
    double halving_period_years;
    double reference_year;
};

/// Cost of an item priced `base_cost_usd` at the trend's reference year,
/// evaluated at `year`. Without a trend or a year the base cost is returned.
double cost_at(double base_cost_usd, const std::optional<CostTrend>& trend,
               std::optional<double> year);

} // namespace clear
