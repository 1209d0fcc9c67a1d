#include "regression.hpp"

#include "clear/error.hpp"

#include <cstddef>

namespace clear::detail {

LineFit fit_line(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw DomainError("fit_line: x and y differ in length");
    const std::size_t n = x.size();
    if (n < 2)
        throw InsufficientDataError("need at least two observations");

    double mean_x = 0, mean_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0)
        throw InsufficientDataError("need at least two distinct abscissae");

    LineFit fit{};
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    if (syy > 0) {
        double ss_res = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            ss_res += r * r;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

} // namespace clear::detail
