#include "clear/link.hpp"

#include "clear/constants.hpp"
#include "clear/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace clear {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Distributed RC: 50% delay 0.38 RC, rise-time bandwidth 0.35.
constexpr double rc_delay_coeff = 0.38;
constexpr double rc_bandwidth_coeff = 0.35;

int multiplicity(const LinkComponent& c, int repeaters)
{
    return c.role == ComponentRole::repeater ? repeaters : 1;
}

double to_dbm(double watts)
{
    return 10.0 * std::log10(watts / 1e-3);
}

double slowest_bandwidth(const LinkSpec& link, int repeaters)
{
    double bw = inf;
    for (const auto& c : link.components)
        if (c.bandwidth_hz > 0 && multiplicity(c, repeaters) > 0)
            bw = std::min(bw, c.bandwidth_hz);
    return bw;
}

} // namespace

std::string_view to_string(ComponentRole role)
{
    switch (role) {
    case ComponentRole::source: return "source";
    case ComponentRole::modulator: return "modulator";
    case ComponentRole::detector: return "detector";
    case ComponentRole::driver: return "driver";
    case ComponentRole::serdes: return "serdes";
    case ComponentRole::repeater: return "repeater";
    case ComponentRole::amplifier: return "amplifier";
    }
    return "unknown";
}

std::optional<ComponentRole> parse_component_role(std::string_view text)
{
    for (auto r : {ComponentRole::source, ComponentRole::modulator, ComponentRole::detector,
                   ComponentRole::driver, ComponentRole::serdes, ComponentRole::repeater,
                   ComponentRole::amplifier})
        if (text == to_string(r))
            return r;
    return std::nullopt;
}

void validate(const LinkSpec& link)
{
    std::vector<std::string> problems;
    const auto need = [&](bool ok, const std::string& what) {
        if (!ok)
            problems.push_back(what);
    };
    const auto nonneg = [](double v) { return std::isfinite(v) && v >= 0; };

    need(std::isfinite(link.length_m) && link.length_m > 0, "length_m must be > 0");
    need(nonneg(link.cross_section_width_m), "cross_section_width_m must be >= 0");
    bool has_repeater = false;
    for (std::size_t i = 0; i < link.components.size(); ++i) {
        const auto& c = link.components[i];
        const std::string at = "components[" + std::to_string(i) + "].";
        need(nonneg(c.bandwidth_hz), at + "bandwidth_hz must be >= 0");
        need(nonneg(c.energy_j_per_bit), at + "energy_j_per_bit must be >= 0");
        need(nonneg(c.area_m2), at + "area_m2 must be >= 0");
        need(nonneg(c.cost_usd), at + "cost_usd must be >= 0");
        need(nonneg(c.delay_s), at + "delay_s must be >= 0");
        need(nonneg(c.insertion_loss_db), at + "insertion_loss_db must be >= 0");
        need(nonneg(c.output_swing_v), at + "output_swing_v must be >= 0");
        has_repeater = has_repeater || c.role == ComponentRole::repeater;
    }
    if (link.repeater_spacing_m) {
        need(std::isfinite(*link.repeater_spacing_m) && *link.repeater_spacing_m > 0,
             "repeater_spacing_m must be > 0");
        need(has_repeater, "repeater_spacing_m requires a component with role 'repeater'");
    }
    if (const auto* e = std::get_if<ElectricalTransport>(&link.transport)) {
        need(nonneg(e->capacitance_f_per_m), "capacitance_f_per_m must be >= 0");
        need(nonneg(e->resistance_ohm_per_m), "resistance_ohm_per_m must be >= 0");
        need(nonneg(e->voltage_swing_v), "voltage_swing_v must be >= 0");
        need(e->lane_count >= 1, "lane_count must be >= 1");
    } else {
        const auto& o = std::get<OpticalTransport>(link.transport);
        need(nonneg(o.loss_db_per_m), "loss_db_per_m must be >= 0");
        need(std::isfinite(o.group_index) && o.group_index >= 1, "group_index must be >= 1");
        need(std::isfinite(o.launch_power_w) && o.launch_power_w > 0, "launch_power_w must be > 0");
        need(std::isfinite(o.detector_sensitivity_w) && o.detector_sensitivity_w > 0,
             "detector_sensitivity_w must be > 0");
        need(o.wdm_channels >= 1, "wdm_channels must be >= 1");
        need(std::isfinite(o.per_channel_rate_cap_bps) && o.per_channel_rate_cap_bps > 0,
             "per_channel_rate_cap_bps must be > 0");
    }
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "link '" << link.name << "': ";
        for (std::size_t i = 0; i < problems.size(); ++i)
            msg << (i ? "; " : "") << problems[i];
        throw ConfigError(msg.str());
    }
}

LinkSpec with_length(LinkSpec link, double length_m)
{
    link.length_m = length_m;
    return link;
}

bool is_optical(const LinkSpec& link)
{
    return std::holds_alternative<OpticalTransport>(link.transport);
}

int repeater_count(const LinkSpec& link)
{
    if (!link.repeater_spacing_m || !(*link.repeater_spacing_m > 0))
        return 0;
    // shave the last ulp or so so exact multiples do not gain a span
    const double spans = std::ceil(link.length_m / *link.repeater_spacing_m * (1.0 - 1e-12));
    return std::max(0, static_cast<int>(spans) - 1);
}

std::vector<double> span_lengths(const LinkSpec& link)
{
    const int repeaters = repeater_count(link);
    if (repeaters == 0)
        return {link.length_m};
    const double s = *link.repeater_spacing_m;
    std::vector<double> out(static_cast<std::size_t>(repeaters), s);
    out.push_back(link.length_m - repeaters * s);
    return out;
}

CapacityResult link_capacity(const LinkSpec& link)
{
    const int repeaters = repeater_count(link);
    const double bw = slowest_bandwidth(link, repeaters);
    const auto spans = span_lengths(link);
    CapacityResult out;

    if (const auto* o = std::get_if<OpticalTransport>(&link.transport)) {
        double component_loss = 0;
        for (const auto& c : link.components)
            if (c.role != ComponentRole::repeater)
                component_loss += c.insertion_loss_db;

        const double budget = to_dbm(o->launch_power_w) - to_dbm(o->detector_sensitivity_w);
        double worst = inf;
        for (std::size_t i = 0; i < spans.size(); ++i) {
            const double margin = budget - o->loss_db_per_m * spans[i] - component_loss;
            if (margin < worst)
                worst = margin;
            if (margin < 0 && !out.failing_span)
                out.failing_span = static_cast<int>(i);
        }
        out.worst_margin_db = worst;
        if (out.failing_span) {
            out.feasible = false;
            out.capacity_bps = 0;
            return out;
        }
        const double per_channel = std::min(2.0 * bw, o->per_channel_rate_cap_bps);
        out.capacity_bps = per_channel * o->wdm_channels;
        return out;
    }

    const auto& e = std::get<ElectricalTransport>(link.transport);
    const double longest = *std::max_element(spans.begin(), spans.end());
    const double rc = e.resistance_ohm_per_m * e.capacitance_f_per_m * longest * longest;
    const double rc_bw = rc > 0 ? 1.0 / (2.0 * std::numbers::pi * rc_bandwidth_coeff * rc) : inf;
    out.capacity_bps = e.lane_count * std::min(bw, rc_bw);
    return out;
}

double p2p_latency(const LinkSpec& link)
{
    const int repeaters = repeater_count(link);
    double delay = 0;
    for (const auto& c : link.components)
        delay += c.delay_s * multiplicity(c, repeaters);

    if (const auto* o = std::get_if<OpticalTransport>(&link.transport))
        return delay + o->group_index * link.length_m / codata2018.light_speed_vacuum;

    const auto& e = std::get<ElectricalTransport>(link.transport);
    for (double l : span_lengths(link))
        delay += rc_delay_coeff * e.resistance_ohm_per_m * e.capacitance_f_per_m * l * l;
    return delay;
}

double link_energy_per_bit(const LinkSpec& link)
{
    const int repeaters = repeater_count(link);
    double energy = 0;
    for (const auto& c : link.components)
        energy += c.energy_j_per_bit * multiplicity(c, repeaters);

    if (const auto* o = std::get_if<OpticalTransport>(&link.transport)) {
        const auto cap = link_capacity(link);
        if (!cap.feasible || !(cap.capacity_bps > 0))
            throw InfeasibleError("link '" + link.name +
                                  "': laser energy per bit undefined at zero capacity");
        return energy + o->launch_power_w * o->wdm_channels / cap.capacity_bps;
    }

    const auto& e = std::get<ElectricalTransport>(link.transport);
    return energy + 0.5 * e.capacitance_f_per_m * link.length_m * e.voltage_swing_v * e.voltage_swing_v;
}

double link_area(const LinkSpec& link)
{
    const int repeaters = repeater_count(link);
    double area = 0;
    for (const auto& c : link.components)
        area += c.area_m2 * multiplicity(c, repeaters);
    return area + link.cross_section_width_m * link.length_m;
}

double link_cost(const LinkSpec& link, std::optional<double> eval_year)
{
    const int repeaters = repeater_count(link);
    double cost = 0;
    for (const auto& c : link.components)
        cost += cost_at(c.cost_usd, c.cost_trend, eval_year) * multiplicity(c, repeaters);
    return cost;
}

std::string default_die(const LinkComponent& component, Technology link_technology)
{
    if (!component.die.empty())
        return component.die;
    if (component.role == ComponentRole::driver || component.role == ComponentRole::serdes)
        return "electronic";
    return transport_die(link_technology);
}

std::string transport_die(Technology link_technology)
{
    return link_technology == Technology::electronic ? "electronic" : "photonic";
}

Factors link_factors(const LinkSpec& link, std::optional<double> eval_year)
{
    const auto cap = link_capacity(link);
    if (!cap.feasible) {
        std::ostringstream msg;
        msg << "link '" << link.name << "': optical power budget fails on span "
            << *cap.failing_span << " (margin " << *cap.worst_margin_db << " dB)";
        throw InfeasibleError(msg.str());
    }
    return {cap.capacity_bps, p2p_latency(link), link_energy_per_bit(link), link_area(link),
            link_cost(link, eval_year)};
}

LinkEvaluation link_clear(const LinkSpec& link, const LimitSet& limits,
                          std::optional<double> eval_year, const AxisValues& floors)
{
    if (limits.level != Level::link)
        throw ConfigError("link_clear requires a link-level limit set");
    LinkEvaluation out;
    const Factors f = link_factors(link, eval_year);
    out.capacity = link_capacity(link);
    out.latency_s = f.latency;
    out.energy_j_per_bit = f.energy;
    out.area_m2 = f.amount;
    out.cost_usd = f.resistance;
    out.clear = compose_clear(f, Level::link);
    out.radar = radar_normalize(f, limits, floors);
    return out;
}

LinkEvaluation link_clear(const LinkSpec& link, const LimitSet& limits,
                          std::optional<double> eval_year)
{
    const Factors f = link_factors(link, eval_year);
    const Factors only[] = {f};
    return link_clear(link, limits, eval_year, default_floors(only, radar_ceilings(limits)));
}

} // namespace clear
