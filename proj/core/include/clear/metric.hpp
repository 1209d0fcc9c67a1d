#pragma once

#include "clear/limits.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace clear {

enum class Technology
{
    electronic,
    photonic,
    plasmonic,
    hybrid,
};

std::string_view to_string(Technology tech);
std::optional<Technology> parse_technology(std::string_view text);

/// The five raw CLEAR factors. Units depend on the hierarchy level.
struct Factors
{
    double capability;
    double latency; // critical length at device level
    double energy;
    double amount;
    double resistance;
};

struct ClearValue
{
    double value;
    Level level;
    Factors factors;
};

/// capability / (latency * energy * amount * resistance).
/// Throws DomainError if any factor is non-positive or non-finite.
ClearValue compose_clear(const Factors& factors, Level level);

enum class Axis : std::size_t
{
    capability,
    latency,
    energy,
    amount,
    resistance,
};

inline constexpr std::size_t axis_count = 5;
inline constexpr std::array<Axis, axis_count> all_axes{
    Axis::capability, Axis::latency, Axis::energy, Axis::amount, Axis::resistance};

std::string_view to_string(Axis axis);

/// One value per axis in C, L, E, A, R order.
using AxisValues = std::array<double, axis_count>;

} // namespace clear
