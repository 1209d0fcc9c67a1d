#pragma once

#include "clear/metric.hpp"

#include <cstddef>
#include <vector>

namespace clear {

using NodeId = std::size_t;

struct GridPos
{
    int x; // column
    int y; // row
};

/// Physical channel between two routers. Area and cost are charged per
/// undirected link; activity is tracked per direction.
struct MeshLink
{
    NodeId a;
    NodeId b;
    Technology technology;
    bool express;
    int hop_span; // 1 for neighbour links
};

struct MeshTopology
{
    int rows = 0;
    int cols = 0;
    double spacing_m = 0;
    std::vector<MeshLink> links;

    std::size_t node_count() const { return static_cast<std::size_t>(rows) * cols; }
    GridPos pos(NodeId node) const;
    NodeId node(int x, int y) const;
    std::size_t directed_link_count() const { return 2 * links.size(); }
    std::size_t express_link_count() const;
};

/// r(c-1) + c(r-1) neighbour links. Throws DomainError on a zero dimension.
MeshTopology build_mesh(int rows, int cols, double spacing_m, Technology technology);

/// Adds horizontal express links 0-s, s-2s, ... in every row while the far
/// endpoint stays inside the row. Throws DomainError for hop_span < 2.
MeshTopology add_express_links(MeshTopology topology, int hop_span, Technology technology);

/// One traversed link. `directed_id` indexes per-direction activity.
struct Hop
{
    std::size_t link;
    NodeId from;
    NodeId to;
    std::size_t directed_id;
};

/// Dimension-order routing (X first, then Y). While moving along X the
/// router takes the longest express link whose far end does not overshoot
/// the destination column.
class RoutingTable
{
public:
    explicit RoutingTable(const MeshTopology& topology);

    std::vector<Hop> route(NodeId src, NodeId dst) const;
    std::size_t hop_count(NodeId src, NodeId dst) const;

    const MeshTopology& topology() const { return *topology_; }

private:
    struct Ports
    {
        std::ptrdiff_t east = -1, west = -1, north = -1, south = -1;
        std::vector<std::size_t> express; // express links touching this node
    };

    template <class Visit>
    void walk(NodeId src, NodeId dst, Visit&& visit) const;

    const MeshTopology* topology_;
    std::vector<Ports> ports_;
};

std::vector<Hop> route(const MeshTopology& topology, NodeId src, NodeId dst);

} // namespace clear
