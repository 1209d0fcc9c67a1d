#include "clear/mesh.hpp"

#include "clear/error.hpp"

#include <cstdlib>

namespace clear {

GridPos MeshTopology::pos(NodeId node) const
{
    return {static_cast<int>(node % cols), static_cast<int>(node / cols)};
}

NodeId MeshTopology::node(int x, int y) const
{
    return static_cast<NodeId>(y) * cols + x;
}

std::size_t MeshTopology::express_link_count() const
{
    std::size_t n = 0;
    for (const auto& l : links)
        n += l.express ? 1 : 0;
    return n;
}

MeshTopology build_mesh(int rows, int cols, double spacing_m, Technology technology)
{
    if (rows < 1 || cols < 1)
        throw DomainError("build_mesh: rows and cols must be >= 1");
    if (!(spacing_m > 0))
        throw DomainError("build_mesh: spacing must be > 0");

    MeshTopology t;
    t.rows = rows;
    t.cols = cols;
    t.spacing_m = spacing_m;
    t.links.reserve(static_cast<std::size_t>(rows) * (cols - 1) +
                    static_cast<std::size_t>(cols) * (rows - 1));
    for (int y = 0; y < rows; ++y)
        for (int x = 0; x + 1 < cols; ++x)
            t.links.push_back({t.node(x, y), t.node(x + 1, y), technology, false, 1});
    for (int y = 0; y + 1 < rows; ++y)
        for (int x = 0; x < cols; ++x)
            t.links.push_back({t.node(x, y), t.node(x, y + 1), technology, false, 1});
    return t;
}

MeshTopology add_express_links(MeshTopology topology, int hop_span, Technology technology)
{
    if (hop_span < 2)
        throw DomainError("add_express_links: hop_span must be >= 2");
    for (int y = 0; y < topology.rows; ++y)
        for (int x = 0; x + hop_span < topology.cols; x += hop_span)
            topology.links.push_back(
                {topology.node(x, y), topology.node(x + hop_span, y), technology, true, hop_span});
    return topology;
}

RoutingTable::RoutingTable(const MeshTopology& topology)
    : topology_(&topology), ports_(topology.node_count())
{
    for (std::size_t i = 0; i < topology.links.size(); ++i) {
        const auto& l = topology.links[i];
        if (l.express) {
            ports_[l.a].express.push_back(i);
            ports_[l.b].express.push_back(i);
            continue;
        }
        const auto pa = topology.pos(l.a);
        const auto pb = topology.pos(l.b);
        const auto idx = static_cast<std::ptrdiff_t>(i);
        if (pa.y == pb.y) {
            auto& left = pa.x < pb.x ? ports_[l.a] : ports_[l.b];
            auto& right = pa.x < pb.x ? ports_[l.b] : ports_[l.a];
            left.east = idx;
            right.west = idx;
        } else {
            auto& low = pa.y < pb.y ? ports_[l.a] : ports_[l.b];
            auto& high = pa.y < pb.y ? ports_[l.b] : ports_[l.a];
            low.north = idx;
            high.south = idx;
        }
    }
}

template <class Visit>
void RoutingTable::walk(NodeId src, NodeId dst, Visit&& visit) const
{
    const auto& t = *topology_;
    const auto hop = [&](std::size_t link, NodeId from) {
        const auto& l = t.links[link];
        const NodeId to = l.a == from ? l.b : l.a;
        visit(Hop{link, from, to, 2 * link + (l.a == from ? 0 : 1)});
        return to;
    };
    const auto base = [&](std::ptrdiff_t link, NodeId from) {
        if (link < 0)
            throw DomainError("route: mesh is missing a neighbour link");
        return hop(static_cast<std::size_t>(link), from);
    };

    const int dx = t.pos(dst).x;
    const int dy = t.pos(dst).y;
    NodeId cur = src;
    while (t.pos(cur).x != dx) {
        const auto here = t.pos(cur);
        const int dir = dx > here.x ? 1 : -1;
        std::ptrdiff_t best = -1;
        int best_len = 1;
        for (std::size_t e : ports_[cur].express) {
            const auto& l = t.links[e];
            const auto far = t.pos(l.a == cur ? l.b : l.a);
            const int step = (far.x - here.x) * dir;
            if (far.y != here.y || step <= 0)
                continue;
            if (std::abs(dx - here.x) >= step && step > best_len) {
                best = static_cast<std::ptrdiff_t>(e);
                best_len = step;
            }
        }
        if (best >= 0)
            cur = hop(static_cast<std::size_t>(best), cur);
        else
            cur = base(dir > 0 ? ports_[cur].east : ports_[cur].west, cur);
    }
    while (t.pos(cur).y != dy)
        cur = base(dy > t.pos(cur).y ? ports_[cur].north : ports_[cur].south, cur);
}

std::vector<Hop> RoutingTable::route(NodeId src, NodeId dst) const
{
    const std::size_t n = topology_->node_count();
    if (src >= n || dst >= n)
        throw DomainError("route: node id out of range");
    std::vector<Hop> path;
    walk(src, dst, [&](const Hop& h) { path.push_back(h); });
    return path;
}

std::size_t RoutingTable::hop_count(NodeId src, NodeId dst) const
{
    const std::size_t n = topology_->node_count();
    if (src >= n || dst >= n)
        throw DomainError("route: node id out of range");
    std::size_t hops = 0;
    walk(src, dst, [&](const Hop&) { ++hops; });
    return hops;
}

std::vector<Hop> route(const MeshTopology& topology, NodeId src, NodeId dst)
{
    return RoutingTable(topology).route(src, dst);
}

} // namespace clear
