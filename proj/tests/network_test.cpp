#include "noc_fixture.hpp"

#include "clear/error.hpp"
#include "clear/network.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

using namespace clear;

namespace {

std::size_t manhattan(const MeshTopology& t, NodeId a, NodeId b)
{
    const auto pa = t.pos(a), pb = t.pos(b);
    return static_cast<std::size_t>(std::abs(pa.x - pb.x) + std::abs(pa.y - pb.y));
}

TrafficMatrix uniform(const MeshTopology& t, double rate)
{
    TrafficParams p;
    p.injection_rate_bps = rate;
    return generate_traffic(p, t, 1);
}

TrafficMatrix single_flow(const MeshTopology& t, NodeId s, NodeId d, double rate)
{
    TrafficMatrix m(t.node_count());
    m.set_rate(s, d, rate);
    return m;
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

} // namespace

TEST_CASE("one-hop latency")
{
    const auto cfg = test_noc_config();
    const auto e = build_mesh(2, 2, 1e-3, Technology::electronic);
    CHECK(avg_latency_clks(e, single_flow(e, 0, 1, 1e9), cfg) == 4.0);
    const auto o = build_mesh(2, 2, 1e-3, Technology::photonic);
    CHECK(avg_latency_clks(o, single_flow(o, 0, 1, 1e9), cfg) == 5.0);
    CHECK_THROWS_AS(avg_latency_clks(e, TrafficMatrix(4), cfg), DomainError);
}

TEST_CASE("uniform latency matches per-pair enumeration")
{
    const auto cfg = test_noc_config();
    for (int k : {2, 4}) {
        const auto m = build_mesh(k, k, 1e-3, Technology::electronic);
        double sum = 0;
        int pairs = 0;
        for (NodeId s = 0; s < m.node_count(); ++s)
            for (NodeId d = 0; d < m.node_count(); ++d)
                if (s != d) {
                    sum += static_cast<double>(manhattan(m, s, d)) * 4.0;
                    ++pairs;
                }
        CHECK(rel(avg_latency_clks(m, uniform(m, 1e9), cfg), sum / pairs) < 1e-12);
    }
}

TEST_CASE("single flow activity")
{
    const auto cfg = test_noc_config();
    const auto m = build_mesh(4, 4, 1e-3, Technology::electronic);
    const auto act = link_activity(m, single_flow(m, m.node(0, 0), m.node(2, 1), 7e9), cfg);
    int loaded = 0;
    for (double l : act.load_bps)
        if (l != 0) {
            CHECK(l == 7e9);
            ++loaded;
        }
    CHECK(loaded == 3);
    CHECK(act.flow_hop_bps == 21e9);
    CHECK(act.router_bps == 28e9);
    CHECK(act.injected_bps == 7e9);
}

TEST_CASE("activity on 2x2 uniform matches enumeration")
{
    const auto cfg = test_noc_config();
    const auto m = build_mesh(2, 2, 1e-3, Technology::electronic);
    const auto t = uniform(m, 3e9);
    const auto act = link_activity(m, t, cfg);
    // Enumerate the 12 pairs with the XY rule written out by hand.
    std::vector<double> expect(m.directed_link_count(), 0.0);
    const auto add = [&](NodeId from, NodeId to, double r) {
        for (std::size_t i = 0; i < m.links.size(); ++i) {
            const auto& l = m.links[i];
            if (l.a == from && l.b == to)
                expect[2 * i] += r;
            else if (l.b == from && l.a == to)
                expect[2 * i + 1] += r;
        }
    };
    for (NodeId s = 0; s < 4; ++s)
        for (NodeId d = 0; d < 4; ++d) {
            if (s == d)
                continue;
            const auto ps = m.pos(s), pd = m.pos(d);
            NodeId at = s;
            if (ps.x != pd.x) {
                const NodeId next = m.node(pd.x, ps.y);
                add(at, next, 1e9);
                at = next;
            }
            if (ps.y != pd.y)
                add(at, d, 1e9);
        }
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(act.load_bps[i] == doctest::Approx(expect[i]).epsilon(1e-15));
        CHECK(act.utilization[i] == doctest::Approx(expect[i] / 50e9).epsilon(1e-15));
    }
}

TEST_CASE("flow conservation with integer rates is exact")
{
    const auto cfg = test_noc_config();
    const auto m = add_express_links(build_mesh(4, 4, 1e-3, Technology::electronic), 3,
                                     Technology::hybrid);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        TrafficMatrix t(m.node_count());
        for (NodeId s = 0; s < 16; ++s)
            for (NodeId d = 0; d < 16; ++d)
                if (s != d && rng() % 3 == 0)
                    t.set_rate(s, d, static_cast<double>(rng() % 1000000));
        const auto act = link_activity(m, t, cfg);
        double sum = 0;
        for (double l : act.load_bps)
            sum += l;
        CHECK(sum == act.flow_hop_bps);
    }
}

TEST_CASE("single flow energy is link plus both routers")
{
    const auto cfg = test_noc_config();
    const auto m = build_mesh(1, 2, 1e-3, Technology::electronic);
    const auto t = single_flow(m, 0, 1, 5e9);
    const auto act = link_activity(m, t, cfg);
    const double e_link = 2e-14 + 0.5 * 1.65e-10 * 1e-3 * 0.8 * 0.8;
    CHECK(network_energy_per_bit(m, act, cfg) == doctest::Approx(e_link + 2 * 4e-13).epsilon(1e-12));
    CHECK(placed_link_energy(cfg, Technology::electronic, 1e-3) == doctest::Approx(e_link).epsilon(1e-12));
}

TEST_CASE("energy per bit on 4x4 uniform matches enumeration and is rate invariant")
{
    const auto cfg = test_noc_config();
    const auto m = build_mesh(4, 4, 1e-3, Technology::electronic);
    const double e_link = 2e-14 + 0.5 * 1.65e-10 * 1e-3 * 0.8 * 0.8;
    double energy = 0, bits = 0;
    for (NodeId s = 0; s < 16; ++s)
        for (NodeId d = 0; d < 16; ++d)
            if (s != d) {
                const double h = static_cast<double>(manhattan(m, s, d));
                energy += h * e_link + (h + 1) * 4e-13;
                bits += 1;
            }
    const double e1 = network_energy_per_bit(m, link_activity(m, uniform(m, 1e9), cfg), cfg);
    const double e2 = network_energy_per_bit(m, link_activity(m, uniform(m, 2e9), cfg), cfg);
    CHECK(rel(e1, energy / bits) < 1e-12);
    CHECK(rel(e1, e2) < 1e-14);
}

TEST_CASE("area and cost")
{
    const auto cfg = test_noc_config();
    const auto m = build_mesh(16, 16, 1e-3, Technology::electronic);
    const auto ac = network_area_and_cost(m, cfg);
    const double per_link = 2 * link_area(cfg.links.at(Technology::electronic).link);
    CHECK(rel(ac.area_m2, 480 * per_link + 256 * 2e-8) < 1e-12);
    CHECK(rel(ac.cost_usd, ac.area_m2 * 1e5) < 1e-12);
    CHECK(ac.area_by_die.size() == 1);

    // additivity over disjoint pieces: two 1x2 meshes vs one 1x2 mesh
    const auto one = build_mesh(1, 2, 1e-3, Technology::electronic);
    const auto both = build_mesh(2, 2, 1e-3, Technology::electronic);
    const auto a1 = network_area_and_cost(one, cfg);
    const auto a2 = network_area_and_cost(both, cfg);
    const double vertical = 2 * link_area(cfg.links.at(Technology::electronic).link) * 1e5;
    CHECK(rel(a2.cost_usd, 2 * a1.cost_usd + 2 * vertical) < 1e-12);

    const auto h = add_express_links(m, 3, Technology::hybrid);
    const auto hc = network_area_and_cost(h, cfg);
    CHECK(hc.area_by_die.at("photonic") > 0);
    CHECK(hc.cost_usd > ac.cost_usd);
}

TEST_CASE("wafer cost trend")
{
    auto cfg = test_noc_config();
    cfg.wafers["electronic"].trend = CostTrend{2.0, 2018};
    const auto m = build_mesh(2, 2, 1e-3, Technology::electronic);
    const double now = network_area_and_cost(m, cfg, 2018.0).cost_usd;
    CHECK(network_area_and_cost(m, cfg, 2022.0).cost_usd == doctest::Approx(now / 4));
}

TEST_CASE("network CLEAR scaling")
{
    auto cfg = test_noc_config();
    const auto m = build_mesh(4, 4, 1e-3, Technology::electronic);
    const auto t = uniform(m, 1e9);
    const auto base = network_clear(m, t, cfg);
    CHECK(rel(base.capacity_per_node_bps, 2 * 24 * 50e9 / 16) < 1e-15);
    CHECK(rel(base.clear.value, base.capacity_per_node_bps /
                                    (base.latency_clks * base.energy_j_per_bit *
                                     base.area_cost.area_m2 * base.area_cost.cost_usd)) < 1e-12);

    auto doubled = cfg;
    doubled.links[Technology::electronic].rate_bps = 100e9;
    doubled.links[Technology::electronic].link.components[0].bandwidth_hz = 3.125e9;
    CHECK(rel(network_clear(m, t, doubled).clear.value, 2 * base.clear.value) < 1e-12);
}

TEST_CASE("config validation")
{
    auto cfg = test_noc_config();
    const auto m = build_mesh(2, 2, 1e-3, Technology::plasmonic);
    CHECK_THROWS_AS(validate(cfg, m), ConfigError);
    cfg.wafers.erase("photonic");
    CHECK_THROWS_AS(validate(cfg, build_mesh(2, 2, 1e-3, Technology::photonic)), ConfigError);
    auto fast = test_noc_config();
    fast.links[Technology::electronic].rate_bps = 60e9; // beyond 32 lanes x 1.5625 GHz
    CHECK_THROWS_AS(validate(fast, build_mesh(2, 2, 1e-3, Technology::electronic)), ConfigError);
}

TEST_CASE("flit scaling")
{
    const auto base = test_noc_config();
    const auto s = scale_for_flit(base, 128);
    const auto& e = s.links.at(Technology::electronic);
    CHECK(std::get<ElectricalTransport>(e.link.transport).lane_count == 128);
    CHECK(e.link.cross_section_width_m == doctest::Approx(4 * 3.2e-6));
    CHECK(e.link.components[0].area_m2 == doctest::Approx(4 * 2e-10));
    CHECK(s.router.area_m2 == doctest::Approx(4 * 2e-8));
    CHECK(s.router_clock_hz == doctest::Approx(50e9 / 128));
    CHECK(e.rate_bps == 50e9);
    const auto& p = s.links.at(Technology::photonic);
    CHECK(p.link.components[0].area_m2 == 2e-10); // modulator unchanged
    CHECK(p.link.components[1].area_m2 == doctest::Approx(4 * 5e-10));
    CHECK(scale_for_flit(base, 32).router.area_m2 == base.router.area_m2);
    CHECK_THROWS_AS(scale_for_flit(base, 0), DomainError);
}

TEST_CASE("degenerate sweep equals direct evaluation")
{
    const auto cfg = test_noc_config();
    const auto m = build_mesh(4, 4, 1e-3, Technology::electronic);
    const auto t = uniform(m, 1e9);
    const std::vector<SweepCase> cases{{"e", m}};
    const std::vector<int> sizes{32};
    const auto rows = flit_sweep(cases, t, cfg, sizes);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].clear == network_clear(m, t, cfg).clear.value);
}

TEST_CASE("crossover detection")
{
    const std::vector<int> xs{32, 64, 128, 256};
    // b doubles, a triples; equal scale factors chosen so they cross at 128
    const std::vector<double> a{1.0, 3.0, 9.0, 27.0};
    const std::vector<double> b{4.0, 8.0, 8.5, 17.0};
    CHECK(find_crossover(xs, a, b) == 128);
    CHECK(find_crossover(xs, b, a) == 128);
    CHECK_FALSE(find_crossover(xs, a, a));
    const std::vector<double> c{0.5, 1.0, 2.0, 4.0};
    CHECK_FALSE(find_crossover(xs, c, std::vector<double>{1.0, 2.0, 4.0, 8.0}));
    CHECK_THROWS_AS(find_crossover(xs, a, std::vector<double>{1.0}), DomainError);
}
