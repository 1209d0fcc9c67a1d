#pragma once

#include "clear/economics.hpp"
#include "clear/link.hpp"
#include "clear/mesh.hpp"
#include "clear/metric.hpp"
#include "clear/traffic.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clear {

/// Per-technology link parameters for a NoC. `link` is a template whose
/// length is replaced by spacing * hop span for each placed link.
struct LinkTechnology
{
    int latency_clks = 1;
    double rate_bps = 0; // rated capacity per direction
    LinkSpec link;
};

struct RouterModel
{
    double dynamic_j_per_bit = 0;
    double area_m2 = 0;
    std::string die = "electronic";
};

struct WaferCost
{
    double usd_per_m2 = 0;
    std::optional<CostTrend> trend;
};

struct NocConfig
{
    int flit_bits = 32;
    double router_clock_hz = 0;
    int router_pipeline_clks = 3;
    RouterModel router;
    std::map<Technology, LinkTechnology> links;
    std::map<std::string, WaferCost> wafers;
};

/// Throws ConfigError listing every missing or invalid entry needed by
/// `topology`.
void validate(const NocConfig& config, const MeshTopology& topology);

/// Carried load per directed link (index = Hop::directed_id).
struct LinkActivity
{
    std::vector<double> load_bps;
    std::vector<double> utilization;
    double injected_bps = 0;
    /// Sum over flows of rate * hop count.
    double flow_hop_bps = 0;
    /// Sum over flows of rate * routers traversed (hops + 1).
    double router_bps = 0;
};

/// Adds each flow's full rate to every directed link on its route.
LinkActivity link_activity(const MeshTopology& topology, const TrafficMatrix& traffic,
                           const NocConfig& config);

/// Traffic-weighted mean of sum over hops of (pipeline + link latency).
/// Throws DomainError when the traffic is all zero.
double avg_latency_clks(const MeshTopology& topology, const TrafficMatrix& traffic,
                        const NocConfig& config);

/// Dynamic energy per injected bit over all links and routers. Optical
/// links charge their laser per transmitted bit (throttled laser).
double network_energy_per_bit(const MeshTopology& topology, const LinkActivity& activity,
                              const NocConfig& config);

/// Energy per bit of one placed link of the given technology and span.
double placed_link_energy(const NocConfig& config, Technology tech, double length_m);

struct AreaCost
{
    double area_m2 = 0;
    double cost_usd = 0;
    std::map<std::string, double> area_by_die;
};

/// Routers plus both directions of every physical link; cost is area on
/// each die times that die's wafer cost at `eval_year`.
AreaCost network_area_and_cost(const MeshTopology& topology, const NocConfig& config,
                               std::optional<double> eval_year = std::nullopt);

struct NetworkEvaluation
{
    double capacity_per_node_bps = 0;
    double latency_clks = 0;
    double energy_j_per_bit = 0;
    AreaCost area_cost;
    LinkActivity activity;
    ClearValue clear{};
};

/// (sum of directed link capacities / N) / (latency * energy * area * cost).
NetworkEvaluation network_clear(const MeshTopology& topology, const TrafficMatrix& traffic,
                                const NocConfig& config,
                                std::optional<double> eval_year = std::nullopt);

/// Config re-derived for another flit width. Electronic links get one lane
/// per flit bit with a wire bundle, driver and serdes footprint scaled by
/// the width ratio; optical serdes and the router footprint scale the same
/// way. Energies per bit and rated capacities are unchanged. The router
/// clock follows the electronic lane rate.
NocConfig scale_for_flit(const NocConfig& base, int flit_bits);

struct SweepCase
{
    std::string label;
    MeshTopology topology;
};

struct SweepRow
{
    int flit_bits;
    std::string label;
    double clear;
};

std::vector<SweepRow> flit_sweep(std::span<const SweepCase> cases, const TrafficMatrix& traffic,
                                 const NocConfig& base, std::span<const int> flit_sizes,
                                 std::optional<double> eval_year = std::nullopt);

/// First x at which sign(a - b) differs from its sign at the first x.
std::optional<int> find_crossover(std::span<const int> xs, std::span<const double> a,
                                  std::span<const double> b);

} // namespace clear
