#include "clear/metric.hpp"

#include "clear/error.hpp"

#include <cmath>
#include <string>

namespace clear {

std::string_view to_string(Technology tech)
{
    switch (tech) {
    case Technology::electronic: return "electronic";
    case Technology::photonic: return "photonic";
    case Technology::plasmonic: return "plasmonic";
    case Technology::hybrid: return "hybrid";
    }
    return "unknown";
}

std::optional<Technology> parse_technology(std::string_view text)
{
    for (auto t : {Technology::electronic, Technology::photonic, Technology::plasmonic,
                   Technology::hybrid})
        if (text == to_string(t))
            return t;
    return std::nullopt;
}

std::string_view to_string(Axis axis)
{
    switch (axis) {
    case Axis::capability: return "capability";
    case Axis::latency: return "latency";
    case Axis::energy: return "energy";
    case Axis::amount: return "amount";
    case Axis::resistance: return "resistance";
    }
    return "unknown";
}

ClearValue compose_clear(const Factors& f, Level level)
{
    const auto check = [](double v, const char* name) {
        if (!(v > 0) || !std::isfinite(v))
            throw DomainError(std::string("CLEAR factor '") + name +
                              "' must be positive and finite");
    };
    check(f.capability, "capability");
    check(f.latency, "latency");
    check(f.energy, "energy");
    check(f.amount, "amount");
    check(f.resistance, "resistance");
    return {f.capability / (f.latency * f.energy * f.amount * f.resistance), level, f};
}

} // namespace clear
