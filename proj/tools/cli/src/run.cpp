#include "clear/cli/run.hpp"

#include "clear/cli/config.hpp"
#include "clear/cli/csv.hpp"
#include "clear/device.hpp"
#include "clear/error.hpp"
#include "clear/limits.hpp"
#include "clear/link.hpp"
#include "clear/network.hpp"
#include "clear/trend.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <limits>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace clear::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Raised inside run() and mapped to exit_code::validation.
struct ValidationFailure
{
    Diagnostics diagnostics;
};

struct IoFailure
{
    std::string path;
    std::string message;
};

struct Outcome
{
    std::vector<Artifact> artifacts;
    std::string table;
};

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoFailure{path.string(), "cannot open file"};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoFailure{path.string(), "read failed"};
    return buf.str();
}

json load_json(const fs::path& path)
{
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationFailure{{{"/", std::string("invalid JSON: ") + e.what()}}};
    }
}

const fs::path& require_config(const RunManifest& m)
{
    if (!m.config)
        throw ValidationFailure{{{"--config", "this command needs a config file"}}};
    return *m.config;
}

template <class T>
T take(Parsed<T> parsed)
{
    if (!parsed.diagnostics.empty())
        throw ValidationFailure{std::move(parsed.diagnostics)};
    return std::move(*parsed.value);
}

std::string safe_name(std::string_view name)
{
    std::string out;
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                        c == '-' || c == '_' || c == '.';
        out += ok ? c : '_';
    }
    return out.empty() ? "unnamed" : out;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json optional_number(std::optional<double> v)
{
    return v && std::isfinite(*v) ? json(*v) : json(nullptr);
}

json limit_json(const LimitSet& l)
{
    return {{"level", std::string(to_string(l.level))},
            {"min_energy_j_per_bit", l.min_energy_j_per_bit},
            {"max_rate_hz", l.max_rate_hz},
            {"min_length_m", l.min_length_m},
            {"min_area_m2", l.min_area_m2},
            {"max_capacity_bps", l.max_capacity_bps},
            {"max_tof_rate_hz", l.max_tof_rate_hz},
            {"cost_efficiency_axis", l.cost_efficiency_axis}};
}

json axes_json(const AxisValues& v)
{
    json j = json::object();
    for (auto a : all_axes)
        j[std::string(to_string(a))] = v[static_cast<std::size_t>(a)];
    return j;
}

json factors_json(const Factors& f)
{
    return axes_json({f.capability, f.latency, f.energy, f.amount, f.resistance});
}

json radar_json(const RadarScores& r)
{
    return {{"scores", axes_json(r.scores)}, {"area", radar_area(r)}};
}

void add_radar_files(std::vector<Artifact>& artifacts, const std::string& stem,
                     const RadarScores& radar)
{
    CsvWriter scores({"axis", "score"});
    for (auto a : all_axes)
        scores.field(to_string(a)).field(radar.scores[static_cast<std::size_t>(a)]).end_row();
    CsvWriter polygon({"vertex", "x", "y"});
    const auto vertices = radar_polygon(radar);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        polygon.field(to_string(all_axes[i])).field(vertices[i].first).field(vertices[i].second).end_row();
    artifacts.push_back({"radar/" + stem + ".csv", scores.str()});
    artifacts.push_back({"radar/" + stem + "_polygon.csv", polygon.str()});
}

bool wants(const RunManifest& m, OutputFormat f)
{
    return m.formats.count(f) > 0;
}

// ---------------------------------------------------------------- limits

Outcome run_limits(const RunManifest& m)
{
    const double temperature = m.temperature_k.value_or(300.0);
    const double mass = codata2018.electron_mass;
    const double length = 100e-6;
    const double group_index = 3.0;
    if (!(temperature > 0) || !std::isfinite(temperature))
        throw ValidationFailure{{{"--temperature", "temperature must be > 0 K"}}};

    const auto device = make_limit_set(temperature, mass, length, group_index, Level::device);
    const auto link = make_limit_set(temperature, mass, length, group_index, Level::link);

    Outcome o;
    std::string& t = o.table;
    t += fmt::format("Physical limits at T = {} K (link length {} m, group index {})\n",
                     temperature, length, group_index);
    t += fmt::format("{:<8} {:<26} {:>12}  {}\n", "level", "quantity", "value", "unit");
    CsvWriter csv({"level", "quantity", "value", "unit"});
    for (const auto* set : {&device, &link}) {
        const std::string level(to_string(set->level));
        const std::pair<const char*, std::pair<double, const char*>> rows[] = {
            {"min_energy_j_per_bit", {set->min_energy_j_per_bit, "J"}},
            {"max_rate_hz", {set->max_rate_hz, "Hz"}},
            {"min_length_m", {set->min_length_m, "m"}},
            {"min_area_m2", {set->min_area_m2, "m^2"}},
            {"max_capacity_bps", {set->max_capacity_bps, "bit/s"}},
            {"max_tof_rate_hz", {set->max_tof_rate_hz, "Hz"}},
            {"cost_efficiency_axis", {set->cost_efficiency_axis, "1/USD"}},
        };
        for (const auto& [name, vu] : rows) {
            t += fmt::format("{:<8} {:<26} {:>12.3g}  {}\n", level, name, vu.first, vu.second);
            csv.field(level).field(std::string_view(name)).field(vu.first).field(std::string_view(vu.second)).end_row();
        }
    }
    if (wants(m, OutputFormat::csv))
        o.artifacts.push_back({"limits.csv", csv.str()});
    if (wants(m, OutputFormat::json))
        o.artifacts.push_back({"limits.json", dump({{"temperature_k", temperature},
                                                    {"particle_mass_kg", mass},
                                                    {"link_length_m", length},
                                                    {"group_index", group_index},
                                                    {"device", limit_json(device)},
                                                    {"link", limit_json(link)}})});
    return o;
}

// ---------------------------------------------------------------- device

Outcome run_device(const RunManifest& m)
{
    auto cfg = take(parse_device_config(load_json(require_config(m))));
    if (m.temperature_k)
        cfg.temperature_k = *m.temperature_k;
    if (m.eval_year)
        cfg.eval_year = m.eval_year;

    const auto limits = make_limit_set(cfg.temperature_k, cfg.particle_mass_kg, 100e-6, 3.0,
                                       Level::device, cfg.cost_efficiency_axis);
    std::vector<Factors> factors;
    for (const auto& d : cfg.devices)
        factors.push_back(device_factors(d, cfg.eval_year));
    const auto floors = default_floors(factors, radar_ceilings(limits), cfg.floor_margin);

    Outcome o;
    CsvWriter csv({"name", "technology", "capability_hz", "critical_length_m", "energy_j_per_bit",
                   "footprint_m2", "unit_cost_usd", "clear", "radar_area"});
    json devices = json::array();
    o.table += fmt::format("{:<28} {:<11} {:>12} {:>11}  {}\n", "device", "technology", "CLEAR",
                           "radar area", "limit violations");
    for (std::size_t i = 0; i < cfg.devices.size(); ++i) {
        const auto& d = cfg.devices[i];
        const auto clear = device_clear(d, cfg.eval_year);
        const auto radar = radar_normalize(factors[i], limits, floors);
        const auto violations = limit_violations(d, limits);
        const auto& f = clear.factors;
        csv.field(d.name).field(to_string(d.technology)).field(f.capability).field(f.latency)
            .field(f.energy).field(f.amount).field(f.resistance).field(clear.value)
            .field(radar_area(radar)).end_row();
        devices.push_back({{"name", d.name},
                           {"technology", std::string(to_string(d.technology))},
                           {"factors", factors_json(f)},
                           {"clear", clear.value},
                           {"radar", radar_json(radar)},
                           {"violations", violations}});
        o.table += fmt::format("{:<28} {:<11} {:>12.4g} {:>11.4f}  {}\n", d.name,
                               to_string(d.technology), clear.value, radar_area(radar),
                               violations.empty() ? "-" : fmt::format("{}", violations.size()));
        if (wants(m, OutputFormat::radar_csv))
            add_radar_files(o.artifacts, "device_" + safe_name(d.name), radar);
    }
    if (wants(m, OutputFormat::csv))
        o.artifacts.push_back({"devices.csv", csv.str()});
    if (wants(m, OutputFormat::json))
        o.artifacts.push_back({"devices.json", dump({{"eval_year", optional_number(cfg.eval_year)},
                                                     {"limits", limit_json(limits)},
                                                     {"floors", axes_json(floors)},
                                                     {"devices", devices}})});
    return o;
}

// ---------------------------------------------------------------- link

Outcome run_link(const RunManifest& m)
{
    auto cfg = take(parse_link_config(load_json(require_config(m))));
    if (m.temperature_k)
        cfg.temperature_k = *m.temperature_k;
    if (m.eval_year)
        cfg.eval_year = m.eval_year;

    struct Case
    {
        const LinkSpec* base;
        LinkSpec placed;
        LimitSet limits;
    };
    std::vector<Case> cases;
    for (const auto& link : cfg.links) {
        const std::vector<double> lengths =
            cfg.lengths_m.empty() ? std::vector<double>{link.length_m} : cfg.lengths_m;
        for (double len : lengths) {
            LinkSpec placed = with_length(link, len);
            validate(placed);
            cases.push_back({&link, std::move(placed),
                             make_limit_set(cfg.temperature_k, cfg.particle_mass_kg, len,
                                            cfg.limit_group_index, Level::link,
                                            cfg.cost_efficiency_axis)});
        }
    }

    std::vector<Factors> factors;
    AxisValues lowest_ceiling;
    lowest_ceiling.fill(std::numeric_limits<double>::infinity());
    for (const auto& c : cases) {
        factors.push_back(link_factors(c.placed, cfg.eval_year)); // throws InfeasibleError
        const auto ceil = radar_ceilings(c.limits);
        for (std::size_t i = 0; i < axis_count; ++i)
            lowest_ceiling[i] = std::min(lowest_ceiling[i], ceil[i]);
    }
    const auto floors = default_floors(factors, lowest_ceiling, cfg.floor_margin);

    Outcome o;
    json links = json::array();
    o.table += fmt::format("{:<22} {:>10} {:>10} {:>11} {:>11} {:>11} {:>9} {:>11}\n", "link",
                           "length_m", "cap_Gbps", "latency_ps", "energy_fJ", "area_um2",
                           "cost_usd", "CLEAR");
    std::size_t k = 0;
    for (const auto& link : cfg.links) {
        CsvWriter csv({"length_m", "capacity_bps", "latency_s", "energy_j", "area_m2", "cost_usd",
                       "clear"});
        json evaluations = json::array();
        for (; k < cases.size() && cases[k].base == &link; ++k) {
            const auto& c = cases[k];
            const auto ev = link_clear(c.placed, c.limits, cfg.eval_year, floors);
            csv.field(c.placed.length_m).field(ev.capacity.capacity_bps).field(ev.latency_s)
                .field(ev.energy_j_per_bit).field(ev.area_m2).field(ev.cost_usd)
                .field(ev.clear.value).end_row();
            evaluations.push_back({{"length_m", c.placed.length_m},
                                   {"repeaters", repeater_count(c.placed)},
                                   {"capacity_bps", ev.capacity.capacity_bps},
                                   {"latency_s", ev.latency_s},
                                   {"energy_j_per_bit", ev.energy_j_per_bit},
                                   {"area_m2", ev.area_m2},
                                   {"cost_usd", ev.cost_usd},
                                   {"clear", ev.clear.value},
                                   {"power_margin_db", optional_number(ev.capacity.worst_margin_db)},
                                   {"limits", limit_json(c.limits)},
                                   {"radar", radar_json(ev.radar)}});
            o.table += fmt::format("{:<22} {:>10.3g} {:>10.4g} {:>11.4g} {:>11.4g} {:>11.4g} {:>9.3g} {:>11.4g}\n",
                                   link.name, c.placed.length_m, ev.capacity.capacity_bps * 1e-9,
                                   ev.latency_s * 1e12, ev.energy_j_per_bit * 1e15,
                                   ev.area_m2 * 1e12, ev.cost_usd, ev.clear.value);
            if (wants(m, OutputFormat::radar_csv))
                add_radar_files(o.artifacts,
                                "link_" + safe_name(link.name) + "_" + format_number(c.placed.length_m),
                                ev.radar);
        }
        if (wants(m, OutputFormat::csv))
            o.artifacts.push_back({"link_" + safe_name(link.name) + ".csv", csv.str()});
        links.push_back({{"name", link.name},
                         {"technology", std::string(to_string(link.technology))},
                         {"evaluations", evaluations}});
    }
    if (wants(m, OutputFormat::json))
        o.artifacts.push_back({"links.json", dump({{"eval_year", optional_number(cfg.eval_year)},
                                                   {"limit_group_index", cfg.limit_group_index},
                                                   {"floors", axes_json(floors)},
                                                   {"links", links}})});
    return o;
}

// ---------------------------------------------------------------- network

std::string link_id(const MeshTopology& t, std::size_t directed)
{
    const auto& l = t.links[directed / 2];
    const NodeId from = directed % 2 == 0 ? l.a : l.b;
    const NodeId to = directed % 2 == 0 ? l.b : l.a;
    return fmt::format("{}:{}->{}", directed / 2, from, to);
}

Outcome run_network(const RunManifest& m)
{
    auto cfg = take(parse_network_config(load_json(require_config(m))));
    if (m.seed)
        cfg.seed = m.seed;
    if (m.eval_year)
        cfg.eval_year = m.eval_year;
    if (!cfg.seed)
        throw ValidationFailure{{{"/seed", "traffic generation needs a seed (config 'seed' or --seed)"}}};

    std::vector<SweepCase> cases;
    for (const auto& c : cfg.networks)
        cases.push_back({c.label, build_case_topology(cfg, c)});
    const auto traffic = generate_traffic(cfg.traffic, cases.front().topology, *cfg.seed);

    Outcome o;
    CsvWriter summary({"technology", "clear", "capacity", "latency_clks", "energy_pj_per_bit",
                       "area_mm2", "cost_usd"});
    json networks = json::array();
    o.table += fmt::format("{:<26} {:>10} {:>9} {:>10} {:>10} {:>10} {:>12}\n", "network",
                           "C_Gbps", "L_clks", "E_pJ/bit", "A_mm2", "R_usd", "CLEAR");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const auto ev = network_clear(c.topology, traffic, cfg.noc, cfg.eval_year);
        const double cap_g = ev.capacity_per_node_bps * 1e-9;
        const double e_pj = ev.energy_j_per_bit * 1e12;
        const double a_mm2 = ev.area_cost.area_m2 * 1e6;
        const double display = cap_g / (ev.latency_clks * e_pj * a_mm2 * ev.area_cost.cost_usd);
        summary.field(c.label).field(display).field(cap_g).field(ev.latency_clks).field(e_pj)
            .field(a_mm2).field(ev.area_cost.cost_usd).end_row();
        o.table += fmt::format("{:<26} {:>10.4g} {:>9.4g} {:>10.4g} {:>10.4g} {:>10.4g} {:>12.4g}\n",
                               c.label, cap_g, ev.latency_clks, e_pj, a_mm2,
                               ev.area_cost.cost_usd, display);

        CsvWriter activity({"link_id", "load_bps", "utilization"});
        for (std::size_t d = 0; d < ev.activity.load_bps.size(); ++d)
            activity.field(link_id(c.topology, d)).field(ev.activity.load_bps[d])
                .field(ev.activity.utilization[d]).end_row();
        if (wants(m, OutputFormat::csv))
            o.artifacts.push_back({"network_" + safe_name(c.label) + "_links.csv", activity.str()});

        const double max_util = ev.activity.utilization.empty()
                                    ? 0.0
                                    : *std::max_element(ev.activity.utilization.begin(),
                                                        ev.activity.utilization.end());
        networks.push_back({{"label", c.label},
                            {"technology", std::string(to_string(cfg.networks[i].technology))},
                            {"base_links", c.topology.links.size() - c.topology.express_link_count()},
                            {"express_links", c.topology.express_link_count()},
                            {"capacity_per_node_bps", ev.capacity_per_node_bps},
                            {"latency_clks", ev.latency_clks},
                            {"energy_j_per_bit", ev.energy_j_per_bit},
                            {"area_m2", ev.area_cost.area_m2},
                            {"cost_usd", ev.area_cost.cost_usd},
                            {"area_by_die_m2", ev.area_cost.area_by_die},
                            {"max_utilization", max_util},
                            {"clear", ev.clear.value}});
    }
    if (wants(m, OutputFormat::csv))
        o.artifacts.push_back({"network_summary.csv", summary.str()});

    json report = {{"seed", *cfg.seed},
                   {"eval_year", optional_number(cfg.eval_year)},
                   {"mesh", {{"rows", cfg.rows}, {"cols", cfg.cols}, {"spacing_m", cfg.spacing_m}}},
                   {"networks", networks}};

    if (!cfg.flit_sweep.empty()) {
        const auto rows = flit_sweep(cases, traffic, cfg.noc, cfg.flit_sweep, cfg.eval_year);
        CsvWriter sweep({"flit_bits", "technology", "clear"});
        json sweep_rows = json::array();
        for (const auto& r : rows) {
            sweep.field(r.flit_bits).field(r.label).field(r.clear).end_row();
            sweep_rows.push_back({{"flit_bits", r.flit_bits}, {"label", r.label}, {"clear", r.clear}});
        }
        const auto series = [&](const std::string& label) {
            std::vector<double> v;
            for (const auto& r : rows)
                if (r.label == label)
                    v.push_back(r.clear);
            return v;
        };
        json crossovers = json::array();
        const auto reference = series(cases.front().label);
        o.table += "\nflit sweep (CLEAR, SI units)\n";
        std::string head = fmt::format("{:<26}", "flit_bits");
        for (int bits : cfg.flit_sweep)
            head += fmt::format(" {:>11}", bits);
        o.table += head + "\n";
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto s = series(cases[i].label);
            std::string line = fmt::format("{:<26}", cases[i].label);
            for (double v : s)
                line += fmt::format(" {:>11.4g}", v);
            o.table += line + "\n";
            if (i == 0)
                continue;
            const auto x = find_crossover(cfg.flit_sweep, s, reference);
            crossovers.push_back({{"label", cases[i].label},
                                  {"reference", cases.front().label},
                                  {"flit_bits", x ? json(*x) : json(nullptr)}});
            if (x)
                o.table += fmt::format("  crossover vs {} at {} bits\n", cases.front().label, *x);
        }
        if (wants(m, OutputFormat::csv))
            o.artifacts.push_back({"flit_sweep.csv", sweep.str()});
        report["flit_sweep"] = {{"flit_sizes", cfg.flit_sweep}, {"rows", sweep_rows},
                                {"crossovers", crossovers}};
    }
    if (wants(m, OutputFormat::json))
        o.artifacts.push_back({"network.json", dump(report)});
    return o;
}

// ---------------------------------------------------------------- trend

template <class T>
std::vector<T> take_csv(CsvParsed<T> parsed)
{
    if (!parsed.diagnostics.empty())
        throw ValidationFailure{std::move(parsed.diagnostics)};
    return std::move(parsed.rows);
}

Outcome run_experience(const RunManifest& m, std::string_view text)
{
    const auto obs = take_csv(parse_cost_observations(text));
    const auto fit = fit_experience_curve(obs);
    const auto& c = fit.curve;
    const std::optional<double> at_year =
        m.eval_year ? std::optional<double>(unit_cost(c, *m.eval_year)) : std::nullopt;

    Outcome o;
    o.table += fmt::format("experience curve over {} observations\n", obs.size());
    o.table += fmt::format("  unit cost at {}: {:.4g} USD\n", c.reference_time, c.initial_unit_cost);
    o.table += std::isinf(c.halving_period)
                   ? std::string("  halving period: none (flat)\n")
                   : fmt::format("  halving period: {:.4g} years\n", c.halving_period);
    o.table += fit.r_squared ? fmt::format("  r^2: {:.4f}\n", *fit.r_squared)
                             : std::string("  r^2: undefined\n");
    if (at_year)
        o.table += fmt::format("  unit cost at {}: {:.4g} USD\n", *m.eval_year, *at_year);

    CsvWriter csv({"year", "observed_cost_usd", "fitted_cost_usd"});
    for (const auto& ob : obs)
        csv.field(ob.year).field(ob.cost_usd).field(unit_cost(c, ob.year)).end_row();
    if (wants(m, OutputFormat::csv))
        o.artifacts.push_back({"experience_fit.csv", csv.str()});
    if (wants(m, OutputFormat::json))
        o.artifacts.push_back(
            {"experience_fit.json",
             dump({{"observations", obs.size()},
                   {"initial_unit_cost_usd", c.initial_unit_cost},
                   {"halving_period_years", optional_number(c.halving_period)},
                   {"reference_year", c.reference_time},
                   {"r_squared", optional_number(fit.r_squared)},
                   {"eval_year", optional_number(m.eval_year)},
                   {"cost_at_eval_year_usd", optional_number(at_year)}})});
    return o;
}

Outcome run_trend(const RunManifest& m)
{
    const auto& path = require_config(m);
    const std::string text = read_file(path);
    const auto kind = detect_csv_kind(text);
    if (!kind)
        throw ValidationFailure{{{"line:1", "unrecognised header; expected '" +
                                                std::string(system_record_header) + "' or '" +
                                                std::string(cost_observation_header) + "'"}}};
    if (*kind == CsvKind::cost_observations)
        return run_experience(m, text);

    const auto records = take_csv(parse_system_records(text));
    const auto fit = fit_growth(records);
    const double temperature = m.temperature_k.value_or(300.0);

    Outcome o;
    o.table += fmt::format("growth fit over {} systems: x{:.4g}/year, doubling every {:.4g} months, r^2 {:.4f}\n\n",
                           records.size(), fit.annual_factor, fit.doubling_months, fit.r_squared);
    o.table += fmt::format("{:<24} {:>8} {:<18} {:>11} {:>10}  {}\n", "system", "year", "class",
                           "CLEAR", "resid_dB", "position");
    CsvWriter csv({"name", "year", "class", "clear", "log2_clear", "computational_efficiency",
                   "energy_efficiency", "fraction_of_landauer", "residual_db", "position"});
    json rows = json::array();
    for (const auto& r : records) {
        const double clear = system_clear(r).value;
        const auto p = efficiency_point(r, temperature);
        const double residual = trend_residual_db(r, fit);
        const auto position = to_string(classify_vs_trend(r, fit));
        csv.field(r.name).field(r.year).field(to_string(r.system_class)).field(clear)
            .field(std::log2(clear)).field(p.computational_efficiency).field(p.energy_efficiency)
            .field(p.fraction_of_landauer).field(residual).field(position).end_row();
        rows.push_back({{"name", r.name},
                        {"year", r.year},
                        {"class", std::string(to_string(r.system_class))},
                        {"clear", clear},
                        {"computational_efficiency", p.computational_efficiency},
                        {"energy_efficiency", p.energy_efficiency},
                        {"fraction_of_landauer", p.fraction_of_landauer},
                        {"residual_db", residual},
                        {"position", std::string(position)}});
        o.table += fmt::format("{:<24} {:>8} {:<18} {:>11.4g} {:>10.2f}  {}\n", r.name, r.year,
                               to_string(r.system_class), clear, residual, position);
    }
    if (wants(m, OutputFormat::csv))
        o.artifacts.push_back({"trend_points.csv", csv.str()});
    if (wants(m, OutputFormat::json))
        o.artifacts.push_back(
            {"trend_fit.json",
             dump({{"band_db", default_trend_band_db},
                   {"bits_per_instruction", default_bits_per_instruction},
                   {"fit", {{"slope_log2_per_year", fit.slope_log2_per_year},
                            {"intercept", fit.intercept},
                            {"annual_factor", fit.annual_factor},
                            {"doubling_months", optional_number(fit.doubling_months)},
                            {"r_squared", fit.r_squared}}},
                   {"records", rows}})});
    return o;
}

void report(std::ostream& err, std::string_view kind, std::string_view path, std::string_view msg)
{
    std::string flat(msg);
    std::replace(flat.begin(), flat.end(), '\n', ' ');
    err << "error[" << kind << "] " << (path.empty() ? "-" : path) << ": " << flat << "\n";
}

} // namespace

std::optional<Command> parse_command(std::string_view text)
{
    if (text == "limits") return Command::limits;
    if (text == "device") return Command::device;
    if (text == "link") return Command::link;
    if (text == "network") return Command::network;
    if (text == "trend") return Command::trend;
    return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view text)
{
    if (text == "table") return OutputFormat::table;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    if (text == "radar_csv") return OutputFormat::radar_csv;
    return std::nullopt;
}

fs::path default_out_dir()
{
    if (const char* env = std::getenv(out_dir_env); env && *env)
        return env;
    return "clear-out";
}

void write_artifacts(const fs::path& dir, const std::vector<Artifact>& artifacts)
{
    const std::string suffix = ".tmp-" + std::to_string(::getpid());
    std::vector<std::pair<fs::path, fs::path>> staged;
    const auto discard = [&] {
        std::error_code ec;
        for (const auto& [tmp, final_path] : staged)
            fs::remove(tmp, ec);
    };
    try {
        for (const auto& a : artifacts) {
            const fs::path final_path = dir / a.relative_path;
            fs::create_directories(final_path.parent_path());
            fs::path tmp = final_path;
            tmp += suffix;
            staged.emplace_back(tmp, final_path);
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(a.content.data(), static_cast<std::streamsize>(a.content.size()));
            out.close();
            if (!out)
                throw std::runtime_error("cannot write " + tmp.string());
        }
        for (const auto& [tmp, final_path] : staged)
            fs::rename(tmp, final_path);
    } catch (...) {
        discard();
        throw;
    }
}

int run(const RunManifest& manifest, std::ostream& out, std::ostream& err)
{
    try {
        if (manifest.formats.empty())
            throw ValidationFailure{{{"--format", "at least one output format is required"}}};

        Outcome outcome;
        switch (manifest.command) {
        case Command::limits: outcome = run_limits(manifest); break;
        case Command::device: outcome = run_device(manifest); break;
        case Command::link: outcome = run_link(manifest); break;
        case Command::network: outcome = run_network(manifest); break;
        case Command::trend: outcome = run_trend(manifest); break;
        }

        if (!outcome.artifacts.empty()) {
            try {
                write_artifacts(manifest.out_dir, outcome.artifacts);
            } catch (const std::exception& e) {
                throw IoFailure{manifest.out_dir.string(), e.what()};
            }
        }
        if (wants(manifest, OutputFormat::table))
            out << outcome.table;
        return exit_code::ok;
    } catch (const ValidationFailure& v) {
        for (const auto& d : v.diagnostics)
            report(err, "validation", d.path, d.message);
        return exit_code::validation;
    } catch (const IoFailure& e) {
        report(err, "io", e.path, e.message);
        return exit_code::io;
    } catch (const InfeasibleError& e) {
        report(err, "infeasible", "", e.what());
        return exit_code::infeasible;
    } catch (const Error& e) {
        report(err, "validation", "", e.what());
        return exit_code::validation;
    }
}

} // namespace clear::cli
