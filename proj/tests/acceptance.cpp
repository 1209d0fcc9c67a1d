// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "noc_fixture.hpp"

#include "clear/cli/config.hpp"
#include "clear/cli/run.hpp"
#include "clear/device.hpp"
#include "clear/limits.hpp"
#include "clear/link.hpp"
#include "clear/mesh.hpp"
#include "clear/network.hpp"
#include "clear/traffic.hpp"
#include "clear/trend.hpp"

#include <fmt/core.h>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace clear;
namespace fs = std::filesystem;

namespace {

struct Check
{
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

const fs::path config_dir = CLEAR_CONFIG_DIR;

nlohmann::json load_json(const fs::path& p)
{
    std::ifstream in(p);
    return nlohmann::json::parse(in);
}

cli::NetworkConfig shipped_network()
{
    auto parsed = cli::parse_network_config(load_json(config_dir / "network.json"));
    if (!parsed.value)
        throw std::runtime_error("shipped network.json does not validate");
    return *parsed.value;
}

// 1
Check physical_limits()
{
    Check c;
    const double e = landauer_energy(300);
    c.expect(rel(e, 2.87e-21) <= 0.01, fmt::format("landauer {:.4g}", e));
    const double l = heisenberg_min_length(300, codata2018.electron_mass);
    c.expect(rel(l, 1.5e-9) <= 0.05, fmt::format("heisenberg {:.4g}", l));
    const double f = margolus_levitin_rate(e);
    c.expect(f > 1.6e13, fmt::format("margolus-levitin {:.4g}", f));
    const double b = bremermann_rate(2 * silicon_cube_mass(1.5e-9));
    c.expect(b > 1e16, fmt::format("bremermann {:.4g}", b));
    c.detail = c.ok ? fmt::format("E={:.3g} J, l={:.3g} m, f={:.3g} Hz, B={:.3g} bit/s", e, l, f, b)
                    : c.detail;
    return c;
}

// 2
Check wire_energy()
{
    Check c;
    LinkSpec w;
    w.name = "wire";
    w.technology = Technology::electronic;
    w.length_m = 1e-2;
    w.cross_section_width_m = 1e-7;
    w.transport = ElectricalTransport{1.65e-10, 0, 1.0, 1};
    const double e = link_energy_per_bit(w);
    c.expect(e >= 8.0e-13, fmt::format("energy {:.4g}", e));
    c.expect(rel(e, 8.25e-13) < 1e-12, fmt::format("energy {:.6g} != 8.25e-13", e));
    if (c.ok)
        c.detail = fmt::format("{:.4g} J/bit", e);
    return c;
}

// 3
Check time_of_flight()
{
    Check c;
    const double a = time_of_flight_rate_limit(1e-4, 3);
    const double b = time_of_flight_rate_limit(1e-3, 3);
    const double d = time_of_flight_rate_limit(1e-2, 3);
    // c is 299792458 m/s exactly, so the nominal decades are 0.07% high.
    c.expect(rel(a, 1e12) < 1e-3, fmt::format("100 um: {:.6g}", a));
    c.expect(rel(b, 1e11) < 1e-3, fmt::format("1 mm: {:.6g}", b));
    c.expect(rel(d, 1e10) < 1e-3, fmt::format("1 cm: {:.6g}", d));
    c.expect(rel(a / b, 10) < 1e-15 && rel(b / d, 10) < 1e-15, "decade ratios are not exact");
    if (c.ok)
        c.detail = fmt::format("{:.6g} / {:.6g} / {:.6g} Hz", a, b, d);
    return c;
}

// 4
Check noc_structure()
{
    Check c;
    const auto base = build_mesh(16, 16, 1e-3, Technology::electronic);
    c.expect(base.links.size() == 480, fmt::format("{} base links", base.links.size()));
    const auto aug = add_express_links(base, 3, Technology::hybrid);
    c.expect(aug.express_link_count() == 80, fmt::format("{} express", aug.express_link_count()));
    for (int row = 0; row < 16; ++row) {
        int n = 0;
        for (const auto& l : aug.links)
            n += l.express && aug.pos(l.a).y == row;
        c.expect(n == 5, fmt::format("row {} has {} express links", row, n));
    }
    if (c.ok)
        c.detail = "480 base, 80 express (5 per row)";
    return c;
}

// Hop counts by breadth-first search over the physical links.
std::vector<std::vector<int>> bfs_hops(const MeshTopology& t)
{
    const auto n = t.node_count();
    std::vector<std::vector<NodeId>> adj(n);
    for (const auto& l : t.links) {
        adj[l.a].push_back(l.b);
        adj[l.b].push_back(l.a);
    }
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (NodeId s = 0; s < n; ++s) {
        std::queue<NodeId> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (auto v : adj[u])
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return dist;
}

// 5
Check latency_accounting()
{
    Check c;
    const auto cfg = test_noc_config();
    for (auto [tech, want] : {std::pair{Technology::electronic, 4.0}, {Technology::photonic, 5.0}}) {
        const auto m = build_mesh(1, 2, 1e-3, tech);
        TrafficMatrix t(2);
        t.set_rate(0, 1, 1e9);
        const double got = avg_latency_clks(m, t, cfg);
        c.expect(got == want, fmt::format("{} one hop: {} clks", to_string(tech), got));
    }
    const auto m = build_mesh(4, 4, 1e-3, Technology::electronic);
    TrafficParams p;
    p.injection_rate_bps = 1e9;
    const auto traffic = generate_traffic(p, m, 1);
    const auto hops = bfs_hops(m);
    const double per_hop = cfg.router_pipeline_clks + cfg.links.at(Technology::electronic).latency_clks;
    double weighted = 0, total = 0;
    for (NodeId s = 0; s < 16; ++s)
        for (NodeId d = 0; d < 16; ++d) {
            weighted += traffic.rate(s, d) * hops[s][d] * per_hop;
            total += traffic.rate(s, d);
        }
    const double oracle = weighted / total;
    const double got = avg_latency_clks(m, traffic, cfg);
    c.expect(rel(got, oracle) <= 1e-12, fmt::format("4x4 uniform {} vs oracle {}", got, oracle));
    if (c.ok)
        c.detail = fmt::format("1 hop: 4 / 5 clks; 4x4 uniform {:.6g} clks", got);
    return c;
}

// 6
Check rate_consistency()
{
    Check c;
    const auto fixture = test_noc_config();
    const auto shipped = shipped_network();
    for (const auto* cfg : {&fixture, &shipped.noc})
        for (auto tech : {Technology::electronic, Technology::photonic}) {
            const auto& lt = cfg->links.at(tech);
            const auto cap = link_capacity(with_length(lt.link, 1e-3));
            c.expect(cap.feasible && cap.capacity_bps == 50e9,
                     fmt::format("{} capacity {:.6g}", to_string(tech), cap.capacity_bps));
            c.expect(lt.rate_bps == 50e9, fmt::format("{} rated {:.6g}", to_string(tech), lt.rate_bps));
        }
    const auto& e = std::get<ElectricalTransport>(shipped.noc.links.at(Technology::electronic).link.transport);
    const auto& o = std::get<OpticalTransport>(shipped.noc.links.at(Technology::photonic).link.transport);
    c.expect(e.lane_count == 32, "electronic lane count");
    c.expect(o.wdm_channels == 2 && o.per_channel_rate_cap_bps == 25e9, "photonic channels");
    if (c.ok)
        c.detail = "32 x 1.5625 GHz = 2 x 25 Gb/s = 50 Gb/s";
    return c;
}

// 7
Check flow_conservation()
{
    Check c;
    const auto cfg = test_noc_config();
    const auto m = build_mesh(4, 4, 1e-3, Technology::electronic);
    const RoutingTable table(m);
    std::mt19937_64 rng(20180501);
    std::uniform_int_distribution<int> rate(0, 1 << 20);
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        TrafficMatrix t(16);
        double flow_hops = 0;
        for (NodeId s = 0; s < 16; ++s)
            for (NodeId d = 0; d < 16; ++d)
                if (s != d) {
                    const double r = rate(rng);
                    t.set_rate(s, d, r);
                    flow_hops += r * static_cast<double>(table.hop_count(s, d));
                }
        const auto act = link_activity(m, t, cfg);
        double loads = 0;
        for (double l : act.load_bps)
            loads += l;
        c.expect(loads == flow_hops, fmt::format("trial {}: {} != {}", trial, loads, flow_hops));
        c.expect(act.flow_hop_bps == flow_hops, fmt::format("trial {}: reported flow-hops", trial));
    }
    if (c.ok)
        c.detail = "1000 matrices, exact";
    return c;
}

// 8
Check homogeneity()
{
    Check c;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> mant(1.0, 10.0);
    std::uniform_real_distribution<double> scale(0.125, 8.0);
    std::uniform_int_distribution<int> axis(0, 4);
    const auto expect_ratio = [&](double base, double scaled, int ax, double k, const char* what) {
        const double want = ax == 0 ? base * k : base / k;
        c.expect(rel(scaled, want) <= 1e-12,
                 fmt::format("{} axis {}: {} vs {}", what, ax, scaled, want));
    };

    constexpr int cases = 10000;
    for (int i = 0; i < cases && c.ok; ++i) {
        const int ax = axis(rng);
        const double k = scale(rng);

        // Factor level, every hierarchy level.
        Factors f{mant(rng) * 1e9, mant(rng) * 1e-9, mant(rng) * 1e-15, mant(rng) * 1e-12,
                  mant(rng)};
        Factors g = f;
        double* slots[] = {&g.capability, &g.latency, &g.energy, &g.amount, &g.resistance};
        *slots[ax] *= k;
        for (Level lv : {Level::device, Level::link, Level::network, Level::system})
            expect_ratio(compose_clear(f, lv).value, compose_clear(g, lv).value, ax, k, "factors");

        // Device inputs.
        DeviceSpec d{"d", Technology::electronic, f.capability, f.latency, f.energy, f.amount,
                     f.resistance, std::nullopt};
        DeviceSpec ds = d;
        double* dslots[] = {&ds.capability_hz, &ds.critical_length_m, &ds.energy_j_per_bit,
                            &ds.footprint_m2, &ds.unit_cost_usd};
        *dslots[ax] *= k;
        expect_ratio(device_clear(d).value, device_clear(ds).value, ax, k, "device");

        // System inputs.
        SystemRecord r{"s", 2000, mant(rng) * 1e3, mant(rng) * 1e-9, mant(rng) * 1e-12,
                       mant(rng), mant(rng) * 1e4, SystemClass::other};
        SystemRecord rs = r;
        double* rslots[] = {&rs.mips, &rs.clock_period_s, &rs.energy_j_per_bit, &rs.volume_m3,
                            &rs.cost_usd};
        *rslots[ax] *= k;
        expect_ratio(system_clear(r).value, system_clear(rs).value, ax, k, "system");

        // Link inputs. The driver bandwidth binds, far below the RC corner,
        // and R'C' is held fixed when the energy is scaled.
        LinkComponent drv;
        drv.name = "drv";
        drv.role = ComponentRole::driver;
        drv.bandwidth_hz = mant(rng) * 1e8;
        drv.energy_j_per_bit = mant(rng) * 1e-14;
        drv.area_m2 = mant(rng) * 1e-10;
        drv.cost_usd = mant(rng) * 1e-6;
        LinkSpec l;
        l.name = "l";
        l.technology = Technology::electronic;
        l.length_m = 1e-3;
        l.cross_section_width_m = mant(rng) * 1e-7;
        l.components = {drv};
        l.transport = ElectricalTransport{1e-11 * mant(rng), 1e3 * mant(rng), 1.0, 8};
        LinkSpec ls = l;
        auto& t = std::get<ElectricalTransport>(ls.transport);
        switch (ax) {
        case 0: ls.components[0].bandwidth_hz *= k; break;
        case 1: t.resistance_ohm_per_m *= k; break;
        case 2:
            ls.components[0].energy_j_per_bit *= k;
            t.capacitance_f_per_m *= k;
            t.resistance_ohm_per_m /= k;
            break;
        case 3: ls.components[0].area_m2 *= k; ls.cross_section_width_m *= k; break;
        case 4: ls.components[0].cost_usd *= k; break;
        }
        expect_ratio(compose_clear(link_factors(l), Level::link).value,
                     compose_clear(link_factors(ls), Level::link).value, ax, k, "link");
    }

    // Network inputs on a 4x4 mesh: rated capacity and wafer cost.
    const auto cfg = test_noc_config();
    const auto m = build_mesh(4, 4, 1e-3, Technology::electronic);
    TrafficParams p;
    p.injection_rate_bps = 1e9;
    const auto traffic = generate_traffic(p, m, 3);
    const double base = network_clear(m, traffic, cfg).clear.value;
    for (int i = 0; i < 200 && c.ok; ++i) {
        // Rated capacity may not exceed the physical link, so only derate.
        const double down = std::min(scale(rng), 1.0);
        auto cap = cfg;
        cap.links.at(Technology::electronic).rate_bps *= down;
        expect_ratio(base, network_clear(m, traffic, cap).clear.value, 0, down, "network");
        const double k = scale(rng);
        auto cost = cfg;
        for (auto& [die, w] : cost.wafers)
            w.usd_per_m2 *= k;
        expect_ratio(base, network_clear(m, traffic, cost).clear.value, 4, k, "network");
    }
    if (c.ok)
        c.detail = fmt::format("{} cases at each level", cases);
    return c;
}

// 9
Check trend_fitting()
{
    Check c;
    std::vector<SystemRecord> exact;
    for (int i = 0; i < 20; ++i)
        exact.push_back({"x", 1990.0 + i, std::exp2(i), 1, 1, 1, 1, SystemClass::other});
    const auto f = fit_growth(exact);
    c.expect(f.doubling_months == 12.0, fmt::format("doubling {:.17g}", f.doubling_months));
    c.expect(std::abs(f.r_squared - 1.0) < 1e-15, fmt::format("r2 {:.17g}", f.r_squared));

    std::mt19937_64 rng(1946);
    std::uniform_real_distribution<double> noise(-0.1, 0.1);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<SystemRecord> noisy;
        for (int i = 0; i < 30; ++i)
            noisy.push_back({"n", 1980.0 + i, std::exp2(i) * (1 + noise(rng)), 1, 1, 1, 1,
                             SystemClass::other});
        const double months = fit_growth(noisy).doubling_months;
        worst = std::max(worst, rel(months, 12.0));
    }
    c.expect(worst <= 0.10, fmt::format("noisy fit off by {:.3g}", worst));
    if (c.ok)
        c.detail = fmt::format("exact 12 months, r2 = 1; noisy worst {:.2f}%", 100 * worst);
    return c;
}

// 10
Check shipped_orderings()
{
    Check c;
    const auto cfg = shipped_network();
    TrafficMatrix traffic;
    std::map<std::string, double> clear;
    std::vector<SweepCase> cases;
    for (const auto& n : cfg.networks) {
        const auto topo = cli::build_case_topology(cfg, n);
        if (traffic.node_count() == 0)
            traffic = generate_traffic(cfg.traffic, topo, *cfg.seed);
        clear[n.label] = network_clear(topo, traffic, cfg.noc, cfg.eval_year).clear.value;
        cases.push_back({n.label, topo});
    }
    const double e = clear.at("electronic");
    const double aug = clear.at("electronic+hyppi_express");
    c.expect(aug > e, fmt::format("augmented {:.4g} <= electronic {:.4g}", aug, e));

    const std::vector<int> flits{32, 64, 128, 256};
    const auto rows = flit_sweep(cases, traffic, cfg.noc, flits, cfg.eval_year);
    std::vector<double> hyppi, elec;
    for (const auto& r : rows) {
        if (r.label == "hyppi")
            hyppi.push_back(r.clear);
        if (r.label == "electronic")
            elec.push_back(r.clear);
    }
    const auto x = find_crossover(flits, hyppi, elec);
    c.expect(x.has_value(), "no sign change of hyppi - electronic over the flit sweep");
    if (c.ok)
        c.detail = fmt::format("augmented/electronic = {:.3f}; crossover at {} bits", aug / e, *x);
    return c;
}

// 11
Check determinism()
{
    Check c;
    const fs::path root = fs::temp_directory_path() / fmt::format("clear-acceptance-{}", std::random_device{}());
    const auto run_into = [&](const fs::path& out) {
        for (auto [cmd, file] : {std::pair{cli::Command::network, "network.json"},
                                 {cli::Command::link, "links.json"},
                                 {cli::Command::device, "devices.json"},
                                 {cli::Command::trend, "systems.csv"}}) {
            cli::RunManifest m;
            m.command = cmd;
            m.config = config_dir / file;
            m.out_dir = out;
            m.formats = {cli::OutputFormat::csv, cli::OutputFormat::json, cli::OutputFormat::radar_csv};
            std::ostringstream sink;
            c.expect(cli::run(m, sink, sink) == cli::exit_code::ok, fmt::format("{} failed", file));
        }
    };
    const auto digests = [](const fs::path& dir) {
        std::map<std::string, std::size_t> out;
        for (const auto& e : fs::recursive_directory_iterator(dir))
            if (e.is_regular_file()) {
                std::ifstream in(e.path(), std::ios::binary);
                std::ostringstream s;
                s << in.rdbuf();
                out[fs::relative(e.path(), dir).generic_string()] = std::hash<std::string>{}(s.str());
            }
        return out;
    };
    run_into(root / "a");
    run_into(root / "b");
    const auto a = digests(root / "a");
    c.expect(!a.empty() && a == digests(root / "b"), "artifacts differ between runs");
    if (c.ok)
        c.detail = fmt::format("{} files identical", a.size());
    std::error_code ec;
    fs::remove_all(root, ec);
    return c;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"physical limits", physical_limits},
        {"wire energy", wire_energy},
        {"time-of-flight ceilings", time_of_flight},
        {"noc structure", noc_structure},
        {"latency accounting", latency_accounting},
        {"rate consistency", rate_consistency},
        {"flow conservation", flow_conservation},
        {"homogeneity", homogeneity},
        {"trend fitting", trend_fitting},
        {"shipped config orderings", shipped_orderings},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("threw: ") + e.what();
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        fmt::print("{} {:>2} {:<26} {} ({:.3f} s)\n", c.ok ? "PASS" : "FAIL", i + 1,
                   criteria[i].first, c.detail, took.count());
        failed += !c.ok;
    }
    return failed == 0 ? 0 : 1;
}
