#include "clear/economics.hpp"

#include "clear/error.hpp"
#include "regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace clear {

void validate(const ExperienceCurve& curve)
{
    if (!(curve.initial_unit_cost > 0) || !std::isfinite(curve.initial_unit_cost))
        throw DomainError("experience curve: initial_unit_cost must be > 0");
    if (!(curve.halving_period > 0))
        throw DomainError("experience curve: halving_period must be > 0");
    if (!std::isfinite(curve.reference_time))
        throw DomainError("experience curve: reference_time must be finite");
}

double unit_cost(const ExperienceCurve& curve, double time)
{
    if (std::isinf(curve.halving_period))
        return curve.initial_unit_cost;
    return curve.initial_unit_cost *
           std::exp2(-(time - curve.reference_time) / curve.halving_period);
}

ExperienceFit fit_experience_curve(std::span<const CostObservation> observations,
                                   std::optional<double> reference_time)
{
    if (observations.empty())
        throw InsufficientDataError("experience curve fit: no observations");

    std::vector<double> t;
    std::vector<double> log_cost;
    t.reserve(observations.size());
    log_cost.reserve(observations.size());
    double earliest = observations.front().year;
    for (const auto& obs : observations) {
        if (!(obs.cost_usd > 0) || !std::isfinite(obs.cost_usd))
            throw DomainError("experience curve fit: costs must be > 0");
        earliest = std::min(earliest, obs.year);
    }
    const double ref = reference_time.value_or(earliest);
    for (const auto& obs : observations) {
        t.push_back(obs.year - ref);
        log_cost.push_back(std::log2(obs.cost_usd));
    }

    const auto line = detail::fit_line(t, log_cost);
    if (line.slope > 0)
        throw DomainError("experience curve fit: unit cost rises over time");

    ExperienceFit fit{};
    fit.curve.reference_time = ref;
    fit.curve.initial_unit_cost = std::exp2(line.intercept);
    fit.curve.halving_period = line.slope == 0 ? std::numeric_limits<double>::infinity()
                                               : -1.0 / line.slope;
    fit.r_squared = line.r_squared;
    return fit;
}

double cost_at(double base_cost_usd, const std::optional<CostTrend>& trend,
               std::optional<double> year)
{
    if (!trend || !year)
        return base_cost_usd;
    const ExperienceCurve curve{base_cost_usd, trend->halving_period_years, trend->reference_year};
    return unit_cost(curve, *year);
}

} // namespace clear
