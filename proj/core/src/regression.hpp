#pragma once

#include <optional>
#include <span>

namespace clear::detail {

struct LineFit
{
    double slope;
    double intercept;
    std::optional<double> r_squared; // unset when y has no variance
};

/// Unweighted least squares y = intercept + slope * x on centred sums.
/// Throws InsufficientDataError with fewer than two distinct x values.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

} // namespace clear::detail
