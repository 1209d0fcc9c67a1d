#include "clear/traffic.hpp"

#include "clear/error.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

namespace clear {

namespace {

// mt19937_64's output sequence is fixed by the standard; the distributions
// are not, so draws are converted by hand for cross-platform determinism.
double unit_draw(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t index_draw(std::mt19937_64& rng, std::size_t bound)
{
    return static_cast<std::size_t>(rng() % bound);
}

} // namespace

std::string_view to_string(TrafficPattern pattern)
{
    switch (pattern) {
    case TrafficPattern::uniform: return "uniform";
    case TrafficPattern::hotspot: return "hotspot";
    case TrafficPattern::exponential_locality: return "exponential_locality";
    }
    return "unknown";
}

std::optional<TrafficPattern> parse_traffic_pattern(std::string_view text)
{
    for (auto p : {TrafficPattern::uniform, TrafficPattern::hotspot,
                   TrafficPattern::exponential_locality})
        if (text == to_string(p))
            return p;
    return std::nullopt;
}

TrafficMatrix::TrafficMatrix(std::size_t nodes) : nodes_(nodes), rates_(nodes * nodes, 0.0) {}

void TrafficMatrix::set_rate(NodeId src, NodeId dst, double bps)
{
    if (src >= nodes_ || dst >= nodes_)
        throw DomainError("traffic: node id out of range");
    if (!std::isfinite(bps) || bps < 0)
        throw DomainError("traffic: rates must be finite and >= 0");
    if (src == dst && bps != 0)
        throw DomainError("traffic: a node cannot send to itself");
    rates_[src * nodes_ + dst] = bps;
}

double TrafficMatrix::total() const
{
    return std::accumulate(rates_.begin(), rates_.end(), 0.0);
}

double TrafficMatrix::injected(NodeId src) const
{
    double sum = 0;
    for (NodeId d = 0; d < nodes_; ++d)
        sum += rate(src, d);
    return sum;
}

TrafficMatrix generate_traffic(const TrafficParams& params, const MeshTopology& topology,
                               std::uint64_t seed)
{
    const std::size_t n = topology.node_count();
    if (n == 0)
        throw DomainError("generate_traffic: empty topology");
    if (!std::isfinite(params.injection_rate_bps) || params.injection_rate_bps < 0)
        throw DomainError("generate_traffic: injection rate must be >= 0");
    if (!(params.injection_jitter >= 0 && params.injection_jitter <= 1))
        throw DomainError("generate_traffic: injection_jitter must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    TrafficMatrix m(n);
    if (n == 1)
        return m;

    std::vector<double> load(n, params.injection_rate_bps);
    if (params.injection_jitter > 0)
        for (auto& l : load)
            l *= 1.0 + params.injection_jitter * (2.0 * unit_draw(rng) - 1.0);

    const double others = static_cast<double>(n - 1);
    switch (params.pattern) {
    case TrafficPattern::uniform:
        for (NodeId s = 0; s < n; ++s)
            for (NodeId d = 0; d < n; ++d)
                if (s != d)
                    m.set_rate(s, d, load[s] / others);
        break;

    case TrafficPattern::hotspot: {
        const double f = params.hotspot_fraction;
        if (!(f >= 0 && f <= 1))
            throw DomainError("generate_traffic: hotspot_fraction must lie in [0, 1]");
        std::vector<NodeId> hot = params.hotspot_nodes;
        if (hot.empty()) {
            if (params.hotspot_count < 1 || static_cast<std::size_t>(params.hotspot_count) > n)
                throw DomainError("generate_traffic: hotspot_count out of range");
            std::vector<NodeId> pool(n);
            std::iota(pool.begin(), pool.end(), NodeId{0});
            for (int i = 0; i < params.hotspot_count; ++i) {
                const std::size_t j = i + index_draw(rng, n - i);
                std::swap(pool[i], pool[j]);
                hot.push_back(pool[i]);
            }
        }
        for (NodeId h : hot)
            if (h >= n)
                throw DomainError("generate_traffic: hotspot node out of range");

        for (NodeId s = 0; s < n; ++s) {
            std::vector<NodeId> targets;
            for (NodeId h : hot)
                if (h != s)
                    targets.push_back(h);
            const double hot_share = targets.empty() ? 0.0 : f * load[s];
            const double spread = (load[s] - hot_share) / others;
            for (NodeId d = 0; d < n; ++d)
                if (d != s)
                    m.set_rate(s, d, spread);
            for (NodeId h : targets)
                m.set_rate(s, h, m.rate(s, h) + hot_share / static_cast<double>(targets.size()));
        }
        break;
    }

    case TrafficPattern::exponential_locality: {
        const double lambda = params.locality_lambda_hops;
        if (!(lambda > 0))
            throw DomainError("generate_traffic: locality_lambda_hops must be > 0");
        std::vector<double> w(n);
        for (NodeId s = 0; s < n; ++s) {
            const auto ps = topology.pos(s);
            double sum = 0;
            for (NodeId d = 0; d < n; ++d) {
                if (d == s) {
                    w[d] = 0;
                    continue;
                }
                const auto pd = topology.pos(d);
                const double hops = std::abs(ps.x - pd.x) + std::abs(ps.y - pd.y);
                w[d] = std::isinf(lambda) ? 1.0 : std::exp(-hops / lambda);
                sum += w[d];
            }
            for (NodeId d = 0; d < n; ++d)
                if (d != s)
                    m.set_rate(s, d, load[s] * w[d] / sum);
        }
        break;
    }
    }
    return m;
}

} // namespace clear
