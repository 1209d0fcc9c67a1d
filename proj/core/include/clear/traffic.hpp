#pragma once

#include "clear/mesh.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

namespace clear {

enum class TrafficPattern
{
    uniform,
    hotspot,
    exponential_locality,
};

std::string_view to_string(TrafficPattern pattern);
std::optional<TrafficPattern> parse_traffic_pattern(std::string_view text);

struct TrafficParams
{
    TrafficPattern pattern = TrafficPattern::uniform;
    double injection_rate_bps = 0; // offered load per source node
    double hotspot_fraction = 0;
    std::vector<NodeId> hotspot_nodes; // empty: draw hotspot_count from the seed
    int hotspot_count = 1;
    double locality_lambda_hops = std::numeric_limits<double>::infinity();
    /// Each source's load is scaled by a seeded factor in [1-j, 1+j].
    double injection_jitter = 0;
};

/// Offered load in bit/s per ordered (source, destination) pair.
class TrafficMatrix
{
public:
    TrafficMatrix() = default;
    explicit TrafficMatrix(std::size_t nodes);

    std::size_t node_count() const { return nodes_; }
    double rate(NodeId src, NodeId dst) const { return rates_[src * nodes_ + dst]; }
    /// Throws DomainError for negative or non-finite rates and for src == dst
    /// with a non-zero rate.
    void set_rate(NodeId src, NodeId dst, double bps);
    double total() const;
    double injected(NodeId src) const;

private:
    std::size_t nodes_ = 0;
    std::vector<double> rates_;
};

/// Deterministic for a given (params, topology, seed).
/// uniform: each source spreads its load evenly over the N-1 other nodes.
/// hotspot: a fraction of each source's load goes to the hotspot nodes, the
/// rest is uniform. exponential_locality: weight exp(-manhattan/lambda),
/// normalised per source.
TrafficMatrix generate_traffic(const TrafficParams& params, const MeshTopology& topology,
                               std::uint64_t seed);

} // namespace clear
