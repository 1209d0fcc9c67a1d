#include "clear/network.hpp"

#include "clear/error.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace clear {

namespace {

const LinkTechnology& tech_entry(const NocConfig& config, Technology tech)
{
    const auto it = config.links.find(tech);
    if (it == config.links.end())
        throw ConfigError("noc config has no link table for technology '" +
                          std::string(to_string(tech)) + "'");
    return it->second;
}

double placed_length(const MeshTopology& topology, const MeshLink& link)
{
    return topology.spacing_m * link.hop_span;
}

struct FlowTotals
{
    LinkActivity activity;
    double latency_clk_bps = 0; // sum of rate * path latency
};

FlowTotals accumulate(const MeshTopology& topology, const TrafficMatrix& traffic,
                      const NocConfig& config)
{
    const std::size_t n = topology.node_count();
    if (traffic.node_count() != n)
        throw ConfigError("traffic matrix size does not match the topology");

    std::vector<int> hop_clks(topology.links.size());
    for (std::size_t i = 0; i < topology.links.size(); ++i)
        hop_clks[i] = config.router_pipeline_clks +
                      tech_entry(config, topology.links[i].technology).latency_clks;

    FlowTotals out;
    auto& act = out.activity;
    act.load_bps.assign(topology.directed_link_count(), 0.0);
    const RoutingTable table(topology);
    std::vector<Hop> path;
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId d = 0; d < n; ++d) {
            const double r = traffic.rate(s, d);
            if (r == 0)
                continue;
            path = table.route(s, d);
            long clks = 0;
            for (const auto& h : path) {
                act.load_bps[h.directed_id] += r;
                clks += hop_clks[h.link];
            }
            const auto hops = static_cast<double>(path.size());
            act.injected_bps += r;
            act.flow_hop_bps += r * hops;
            act.router_bps += r * (hops + 1.0);
            out.latency_clk_bps += r * static_cast<double>(clks);
        }
    }

    act.utilization.resize(act.load_bps.size());
    for (std::size_t i = 0; i < act.load_bps.size(); ++i) {
        const double rate = tech_entry(config, topology.links[i / 2].technology).rate_bps;
        act.utilization[i] = act.load_bps[i] / rate;
    }
    return out;
}

double wafer_rate(const NocConfig& config, const std::string& die, std::optional<double> year)
{
    const auto it = config.wafers.find(die);
    if (it == config.wafers.end())
        throw ConfigError("noc config has no wafer cost for die '" + die + "'");
    return cost_at(it->second.usd_per_m2, it->second.trend, year);
}

} // namespace

void validate(const NocConfig& config, const MeshTopology& topology)
{
    std::vector<std::string> problems;
    const auto need = [&](bool ok, const std::string& what) {
        if (!ok)
            problems.push_back(what);
    };
    need(config.flit_bits > 0, "flit_bits must be > 0");
    need(config.router_pipeline_clks >= 1, "router_pipeline_clks must be >= 1");
    need(config.router_clock_hz > 0, "router_clock_hz must be > 0");
    need(config.router.dynamic_j_per_bit >= 0, "router.dynamic_j_per_bit must be >= 0");
    need(config.router.area_m2 >= 0, "router.area_m2 must be >= 0");
    need(config.wafers.count(config.router.die) > 0,
         "no wafer cost for router die '" + config.router.die + "'");
    for (const auto& [die, wafer] : config.wafers)
        need(wafer.usd_per_m2 >= 0, "wafer cost for '" + die + "' must be >= 0");

    std::map<Technology, int> longest;
    for (const auto& l : topology.links)
        longest[l.technology] = std::max(longest[l.technology], l.hop_span);

    for (const auto& [tech, span] : longest) {
        const std::string name(to_string(tech));
        const auto it = config.links.find(tech);
        if (it == config.links.end()) {
            problems.push_back("no link table for technology '" + name + "'");
            continue;
        }
        const auto& lt = it->second;
        need(lt.latency_clks >= 1, name + ": latency_clks must be >= 1");
        need(lt.rate_bps > 0, name + ": rate_bps must be > 0");
        try {
            const LinkSpec placed = with_length(lt.link, topology.spacing_m * span);
            validate(placed);
            const auto cap = link_capacity(placed);
            need(cap.feasible, name + ": power budget does not close at the placed length");
            need(!cap.feasible || cap.capacity_bps >= lt.rate_bps,
                 name + ": rated capacity exceeds the link's physical capacity");
        } catch (const ConfigError& e) {
            problems.push_back(name + ": " + e.what());
        }
        for (const auto& c : lt.link.components) {
            const auto die = default_die(c, tech);
            need(config.wafers.count(die) > 0, name + ": no wafer cost for die '" + die + "'");
        }
        need(config.wafers.count(transport_die(tech)) > 0,
             name + ": no wafer cost for die '" + transport_die(tech) + "'");
    }

    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "noc config: ";
        for (std::size_t i = 0; i < problems.size(); ++i)
            msg << (i ? "; " : "") << problems[i];
        throw ConfigError(msg.str());
    }
}

LinkActivity link_activity(const MeshTopology& topology, const TrafficMatrix& traffic,
                           const NocConfig& config)
{
    return accumulate(topology, traffic, config).activity;
}

double avg_latency_clks(const MeshTopology& topology, const TrafficMatrix& traffic,
                        const NocConfig& config)
{
    const auto totals = accumulate(topology, traffic, config);
    if (!(totals.activity.injected_bps > 0))
        throw DomainError("average latency is undefined without traffic");
    return totals.latency_clk_bps / totals.activity.injected_bps;
}

double placed_link_energy(const NocConfig& config, Technology tech, double length_m)
{
    return link_energy_per_bit(with_length(tech_entry(config, tech).link, length_m));
}

double network_energy_per_bit(const MeshTopology& topology, const LinkActivity& activity,
                              const NocConfig& config)
{
    if (!(activity.injected_bps > 0))
        throw DomainError("energy per bit is undefined without traffic");

    std::map<std::pair<Technology, int>, double> per_bit;
    double power = 0; // J/s
    for (std::size_t i = 0; i < activity.load_bps.size(); ++i) {
        const double load = activity.load_bps[i];
        if (load == 0)
            continue;
        const auto& l = topology.links[i / 2];
        const auto key = std::make_pair(l.technology, l.hop_span);
        auto it = per_bit.find(key);
        if (it == per_bit.end())
            it = per_bit
                     .emplace(key, placed_link_energy(config, l.technology,
                                                      placed_length(topology, l)))
                     .first;
        power += load * it->second;
    }
    power += activity.router_bps * config.router.dynamic_j_per_bit;
    return power / activity.injected_bps;
}

AreaCost network_area_and_cost(const MeshTopology& topology, const NocConfig& config,
                               std::optional<double> eval_year)
{
    AreaCost out;
    out.area_by_die[config.router.die] +=
        config.router.area_m2 * static_cast<double>(topology.node_count());

    for (const auto& l : topology.links) {
        const LinkSpec placed =
            with_length(tech_entry(config, l.technology).link, placed_length(topology, l));
        const int repeaters = repeater_count(placed);
        // duplex: one physical channel per direction
        for (const auto& c : placed.components) {
            const int mult = c.role == ComponentRole::repeater ? repeaters : 1;
            out.area_by_die[default_die(c, l.technology)] += 2.0 * c.area_m2 * mult;
        }
        out.area_by_die[transport_die(l.technology)] +=
            2.0 * placed.cross_section_width_m * placed.length_m;
    }

    for (const auto& [die, area] : out.area_by_die) {
        out.area_m2 += area;
        out.cost_usd += area * wafer_rate(config, die, eval_year);
    }
    return out;
}

NetworkEvaluation network_clear(const MeshTopology& topology, const TrafficMatrix& traffic,
                                const NocConfig& config, std::optional<double> eval_year)
{
    validate(config, topology);
    auto totals = accumulate(topology, traffic, config);
    if (!(totals.activity.injected_bps > 0))
        throw DomainError("network CLEAR is undefined without traffic");

    NetworkEvaluation out;
    double capacity = 0;
    for (const auto& l : topology.links)
        capacity += 2.0 * tech_entry(config, l.technology).rate_bps;
    out.capacity_per_node_bps = capacity / static_cast<double>(topology.node_count());
    out.latency_clks = totals.latency_clk_bps / totals.activity.injected_bps;
    out.energy_j_per_bit = network_energy_per_bit(topology, totals.activity, config);
    out.area_cost = network_area_and_cost(topology, config, eval_year);
    out.activity = std::move(totals.activity);
    out.clear = compose_clear({out.capacity_per_node_bps, out.latency_clks, out.energy_j_per_bit,
                               out.area_cost.area_m2, out.area_cost.cost_usd},
                              Level::network);
    return out;
}

NocConfig scale_for_flit(const NocConfig& base, int flit_bits)
{
    if (flit_bits <= 0)
        throw DomainError("flit size must be > 0");
    if (flit_bits == base.flit_bits)
        return base;

    const double k = static_cast<double>(flit_bits) / base.flit_bits;
    NocConfig out = base;
    out.flit_bits = flit_bits;
    out.router.area_m2 *= k;
    out.router_clock_hz = base.router_clock_hz / k;

    for (auto& [tech, lt] : out.links) {
        auto& link = lt.link;
        const bool electrical = !is_optical(link);
        for (auto& c : link.components) {
            const bool per_bit_lane =
                c.role == ComponentRole::serdes ||
                (electrical && (c.role == ComponentRole::driver || c.role == ComponentRole::repeater));
            if (per_bit_lane) {
                c.area_m2 *= k;
                c.cost_usd *= k;
            }
        }
        if (auto* e = std::get_if<ElectricalTransport>(&link.transport)) {
            e->lane_count = flit_bits;
            link.cross_section_width_m *= k;
            out.router_clock_hz = lt.rate_bps / flit_bits;
        }
    }
    return out;
}

std::vector<SweepRow> flit_sweep(std::span<const SweepCase> cases, const TrafficMatrix& traffic,
                                 const NocConfig& base, std::span<const int> flit_sizes,
                                 std::optional<double> eval_year)
{
    if (flit_sizes.empty())
        throw DomainError("flit sweep needs at least one flit size");
    std::vector<SweepRow> rows;
    rows.reserve(flit_sizes.size() * cases.size());
    for (int flit : flit_sizes) {
        const NocConfig cfg = scale_for_flit(base, flit);
        for (const auto& c : cases)
            rows.push_back({flit, c.label, network_clear(c.topology, traffic, cfg, eval_year).clear.value});
    }
    return rows;
}

std::optional<int> find_crossover(std::span<const int> xs, std::span<const double> a,
                                  std::span<const double> b)
{
    if (xs.size() != a.size() || xs.size() != b.size())
        throw DomainError("find_crossover: series lengths differ");
    int previous = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double diff = a[i] - b[i];
        const int sign = (diff > 0) - (diff < 0);
        if (sign == 0)
            continue;
        if (previous != 0 && sign != previous)
            return xs[i];
        previous = sign;
    }
    return std::nullopt;
}

} // namespace clear
