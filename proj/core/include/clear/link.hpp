#pragma once

#include "clear/device.hpp"
#include "clear/economics.hpp"
#include "clear/limits.hpp"
#include "clear/metric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace clear {

enum class ComponentRole
{
    source,
    modulator,
    detector,
    driver,
    serdes,
    repeater,
    amplifier,
};

std::string_view to_string(ComponentRole role);
std::optional<ComponentRole> parse_component_role(std::string_view text);

/// One active or supporting device on a link. A component with role
/// `repeater` is a template instantiated once per intermediate repeater.
struct LinkComponent
{
    std::string name;
    ComponentRole role = ComponentRole::driver;
    double bandwidth_hz = 0; // 0: does not constrain the rate
    double energy_j_per_bit = 0;
    double area_m2 = 0;
    double cost_usd = 0;
    double delay_s = 0;
    double insertion_loss_db = 0; // optical components
    double output_swing_v = 0;    // electrical components
    std::optional<CostTrend> cost_trend;
    /// Die the component is fabricated on; empty selects the default for
    /// its role and the link technology.
    std::string die;
};

struct ElectricalTransport
{
    double capacitance_f_per_m = 0;
    double resistance_ohm_per_m = 0;
    double voltage_swing_v = 0;
    int lane_count = 1;
};

/// Crosstalk is folded into `loss_db_per_m` as an effective penalty.
struct OpticalTransport
{
    double loss_db_per_m = 0;
    double group_index = 1;
    double launch_power_w = 0; // per wavelength
    double detector_sensitivity_w = 0;
    int wdm_channels = 1;
    double per_channel_rate_cap_bps = 0;
};

using Transport = std::variant<ElectricalTransport, OpticalTransport>;

struct LinkSpec
{
    std::string name;
    Technology technology = Technology::electronic;
    double length_m = 0;
    std::vector<LinkComponent> components;
    Transport transport;
    std::optional<double> repeater_spacing_m;
    double cross_section_width_m = 0;
};

/// Throws ConfigError listing every broken invariant.
void validate(const LinkSpec& link);

LinkSpec with_length(LinkSpec link, double length_m);

bool is_optical(const LinkSpec& link);

/// ceil(length / spacing) - 1 intermediate repeaters; 0 without spacing.
int repeater_count(const LinkSpec& link);

/// Repeater-to-repeater span lengths: full spans of `spacing` followed by
/// the remainder.
std::vector<double> span_lengths(const LinkSpec& link);

struct CapacityResult
{
    double capacity_bps = 0;
    bool feasible = true;
    /// Index of the first span whose power budget fails to close.
    std::optional<int> failing_span;
    /// Smallest power margin over all spans in dB (optical links only).
    std::optional<double> worst_margin_db;
};

/// Min-of-constraints capacity with binary (1 bit/symbol) signalling.
///
/// Optical: per-channel rate is min(2 * slowest component bandwidth,
/// per-channel cap) times the WDM channel count, provided every span closes
/// its power budget (launch dB - propagation loss - component insertion
/// loss >= sensitivity dB). Electrical: lanes times
/// min(slowest component bandwidth, 1 / (2 pi 0.35 R'C' l^2)) where l is the
/// longest span.
CapacityResult link_capacity(const LinkSpec& link);

/// Component delays (repeaters counted per instance) plus transport
/// delay: n_g L / c for optical, 0.38 R'C' l^2 summed over spans for
/// electrical.
double p2p_latency(const LinkSpec& link);

/// Component energies plus transport energy: 1/2 C' L V^2 for electrical,
/// launch power * channels / capacity for optical.
/// Throws InfeasibleError for an optical link with zero capacity.
double link_energy_per_bit(const LinkSpec& link);

/// Component footprints plus cross_section_width * length.
double link_area(const LinkSpec& link);

double link_cost(const LinkSpec& link, std::optional<double> eval_year = std::nullopt);

/// Die a component is placed on when `component.die` is empty.
std::string default_die(const LinkComponent& component, Technology link_technology);

/// Die the passive transport (wire bundle or waveguide) sits on.
std::string transport_die(Technology link_technology);

struct LinkEvaluation
{
    CapacityResult capacity;
    double latency_s = 0;
    double energy_j_per_bit = 0;
    double area_m2 = 0;
    double cost_usd = 0;
    ClearValue clear{};
    RadarScores radar{};
};

/// Link-level CLEAR: capacity / (latency * energy * area * cost), with
/// radar scores against `limits`. Throws InfeasibleError when the power
/// budget does not close.
LinkEvaluation link_clear(const LinkSpec& link, const LimitSet& limits,
                          std::optional<double> eval_year, const AxisValues& floors);

/// As above, with floors one decade below this link's own factors.
LinkEvaluation link_clear(const LinkSpec& link, const LimitSet& limits,
                          std::optional<double> eval_year = std::nullopt);

/// The five raw factors without the radar step.
Factors link_factors(const LinkSpec& link, std::optional<double> eval_year = std::nullopt);

} // namespace clear
