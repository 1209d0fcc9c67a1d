#include "clear/cli/config.hpp"

#include "clear/cli/schema.hpp"

#include <set>

namespace clear::cli {

using nlohmann::json;

namespace {

template <class T>
std::optional<T> opt(const json& j, const char* key)
{
    if (auto it = j.find(key); it != j.end() && !it->is_null())
        return it->get<T>();
    return std::nullopt;
}

std::optional<CostTrend> parse_trend(const json& j, const char* key)
{
    const auto it = j.find(key);
    if (it == j.end())
        return std::nullopt;
    return CostTrend{it->at("halving_period_years").get<double>(),
                     it->at("reference_year").get<double>()};
}

LinkComponent parse_component(const json& j)
{
    LinkComponent c;
    c.name = j.at("name").get<std::string>();
    c.role = *parse_component_role(j.at("role").get<std::string>());
    c.bandwidth_hz = j.value("bandwidth_hz", 0.0);
    c.energy_j_per_bit = j.value("energy_j_per_bit", 0.0);
    c.area_m2 = j.value("area_m2", 0.0);
    c.cost_usd = j.value("cost_usd", 0.0);
    c.delay_s = j.value("delay_s", 0.0);
    c.insertion_loss_db = j.value("insertion_loss_db", 0.0);
    c.output_swing_v = j.value("output_swing_v", 0.0);
    c.cost_trend = parse_trend(j, "cost_trend");
    c.die = j.value("die", std::string{});
    return c;
}

LinkSpec parse_link_spec(const json& j)
{
    LinkSpec link;
    link.name = j.at("name").get<std::string>();
    link.technology = *parse_technology(j.at("technology").get<std::string>());
    link.length_m = j.value("length_m", 0.0);
    for (const auto& c : j.at("components"))
        link.components.push_back(parse_component(c));
    if (auto e = j.find("electrical"); e != j.end()) {
        ElectricalTransport t;
        t.capacitance_f_per_m = e->at("capacitance_f_per_m").get<double>();
        t.resistance_ohm_per_m = e->at("resistance_ohm_per_m").get<double>();
        t.voltage_swing_v = e->at("voltage_swing_v").get<double>();
        t.lane_count = e->value("lane_count", 1);
        link.transport = t;
    } else {
        const auto& o = j.at("optical");
        OpticalTransport t;
        t.loss_db_per_m = o.at("loss_db_per_m").get<double>();
        t.group_index = o.at("group_index").get<double>();
        t.launch_power_w = o.at("launch_power_w").get<double>();
        t.detector_sensitivity_w = o.at("detector_sensitivity_w").get<double>();
        t.wdm_channels = o.value("wdm_channels", 1);
        t.per_channel_rate_cap_bps = o.at("per_channel_rate_cap_bps").get<double>();
        link.transport = t;
    }
    link.repeater_spacing_m = opt<double>(j, "repeater_spacing_m");
    link.cross_section_width_m = j.at("cross_section_width_m").get<double>();
    return link;
}

// Rules on a link document that has already passed the schema.
void check_link_spec(const json& j, const std::string& path, bool length_required,
                     Diagnostics& out)
{
    const bool electrical = j.contains("electrical");
    const bool optical = j.contains("optical");
    if (electrical == optical)
        out.push_back({path, "exactly one of 'electrical' or 'optical' is required"});
    if (length_required && !j.contains("length_m"))
        out.push_back({path, "missing 'length_m' (no lengths_m sweep is configured)"});
    if (j.contains("repeater_spacing_m")) {
        bool has_repeater = false;
        for (const auto& c : j.at("components"))
            has_repeater = has_repeater || c.at("role") == "repeater";
        if (!has_repeater)
            out.push_back({path + "/repeater_spacing_m",
                           "repeater_spacing_m requires a component with role 'repeater'"});
    }
}

void check_unique(const json& array, const char* key, const std::string& path, Diagnostics& out)
{
    std::set<std::string> seen;
    for (std::size_t i = 0; i < array.size(); ++i) {
        const auto name = array[i].at(key).get<std::string>();
        if (!seen.insert(name).second)
            out.push_back({path + "/" + std::to_string(i) + "/" + key,
                           "duplicate " + std::string(key) + " '" + name + "'"});
    }
}

void check_network(const json& doc, Diagnostics& out)
{
    const auto& networks = doc.at("networks");
    check_unique(networks, "label", "/networks", out);

    const auto& noc = doc.at("noc");
    const auto& links = noc.at("links");
    const auto& wafers = noc.at("wafers");
    std::set<std::string> used;
    for (std::size_t i = 0; i < networks.size(); ++i) {
        const auto& n = networks[i];
        used.insert(n.at("technology").get<std::string>());
        if (n.contains("express"))
            used.insert(n.at("express").at("technology").get<std::string>());
    }
    for (const auto& tech : used)
        if (!links.contains(tech))
            out.push_back({"/noc/links", "no link table for technology '" + tech + "'"});

    const std::string router_die = noc.at("router").value("die", std::string("electronic"));
    if (!wafers.contains(router_die))
        out.push_back({"/noc/wafers", "no wafer cost for router die '" + router_die + "'"});
    for (const auto& [tech_name, entry] : links.items()) {
        const std::string path = "/noc/links/" + tech_name + "/link";
        const auto before = out.size();
        check_link_spec(entry.at("link"), path, false, out);
        if (out.size() != before)
            continue;
        const auto tech = *parse_technology(tech_name);
        const auto spec = parse_link_spec(entry.at("link"));
        if (spec.technology != tech)
            out.push_back({path + "/technology", "link technology must match its table key '" +
                                                     tech_name + "'"});
        std::set<std::string> dies{transport_die(tech)};
        for (const auto& c : spec.components)
            dies.insert(default_die(c, tech));
        for (const auto& die : dies)
            if (!wafers.contains(die))
                out.push_back({"/noc/wafers", "no wafer cost for die '" + die + "' used by " +
                                                  tech_name + " links"});
    }

    const auto& mesh = doc.at("mesh");
    const auto nodes = mesh.at("rows").get<std::int64_t>() * mesh.at("cols").get<std::int64_t>();
    const auto& traffic = doc.at("traffic");
    if (auto hs = traffic.find("hotspot_nodes"); hs != traffic.end())
        for (std::size_t i = 0; i < hs->size(); ++i)
            if ((*hs)[i].get<std::int64_t>() >= nodes)
                out.push_back({"/traffic/hotspot_nodes/" + std::to_string(i),
                               "node id outside the " + std::to_string(nodes) + "-node mesh"});
    if (auto hc = traffic.find("hotspot_count"); hc != traffic.end() && hc->get<std::int64_t>() > nodes)
        out.push_back({"/traffic/hotspot_count", "more hotspots than mesh nodes"});
    for (std::size_t i = 0; i < networks.size(); ++i)
        if (auto ex = networks[i].find("express");
            ex != networks[i].end() && ex->at("hop_span").get<std::int64_t>() >= mesh.at("cols").get<std::int64_t>())
            out.push_back({"/networks/" + std::to_string(i) + "/express/hop_span",
                           "hop span does not fit in a row; no express links would be added"});
}

} // namespace

std::string_view schema_name(ConfigKind kind)
{
    switch (kind) {
    case ConfigKind::device: return "device_config.schema.json";
    case ConfigKind::link: return "link_config.schema.json";
    case ConfigKind::network: return "network_config.schema.json";
    }
    return "";
}

Diagnostics validate_document(ConfigKind kind, const json& document)
{
    Diagnostics out = SchemaRegistry::builtin().validate(document, schema_name(kind));
    if (!out.empty())
        return out; // cross-field rules assume a well-typed document

    switch (kind) {
    case ConfigKind::device:
        check_unique(document.at("devices"), "name", "/devices", out);
        break;
    case ConfigKind::link: {
        const bool sweep = document.contains("lengths_m");
        const auto& links = document.at("links");
        check_unique(links, "name", "/links", out);
        for (std::size_t i = 0; i < links.size(); ++i)
            check_link_spec(links[i], "/links/" + std::to_string(i), !sweep, out);
        break;
    }
    case ConfigKind::network:
        check_network(document, out);
        break;
    }
    return out;
}

Parsed<DeviceConfig> parse_device_config(const json& doc)
{
    Parsed<DeviceConfig> out;
    out.diagnostics = validate_document(ConfigKind::device, doc);
    if (!out.diagnostics.empty())
        return out;

    DeviceConfig cfg;
    cfg.temperature_k = doc.value("temperature_k", cfg.temperature_k);
    cfg.particle_mass_kg = doc.value("particle_mass_kg", cfg.particle_mass_kg);
    cfg.cost_efficiency_axis = doc.value("cost_efficiency_axis", cfg.cost_efficiency_axis);
    cfg.floor_margin = doc.value("floor_margin", cfg.floor_margin);
    cfg.eval_year = opt<double>(doc, "eval_year");
    for (const auto& d : doc.at("devices")) {
        DeviceSpec spec;
        spec.name = d.at("name").get<std::string>();
        spec.technology = *parse_technology(d.at("technology").get<std::string>());
        spec.capability_hz = d.at("capability_hz").get<double>();
        spec.critical_length_m = d.at("critical_length_m").get<double>();
        spec.energy_j_per_bit = d.at("energy_j_per_bit").get<double>();
        spec.footprint_m2 = d.at("footprint_m2").get<double>();
        spec.unit_cost_usd = d.at("unit_cost_usd").get<double>();
        spec.cost_trend = parse_trend(d, "cost_trend");
        cfg.devices.push_back(std::move(spec));
    }
    out.value = std::move(cfg);
    return out;
}

Parsed<LinkConfig> parse_link_config(const json& doc)
{
    Parsed<LinkConfig> out;
    out.diagnostics = validate_document(ConfigKind::link, doc);
    if (!out.diagnostics.empty())
        return out;

    LinkConfig cfg;
    cfg.temperature_k = doc.value("temperature_k", cfg.temperature_k);
    cfg.particle_mass_kg = doc.value("particle_mass_kg", cfg.particle_mass_kg);
    cfg.limit_group_index = doc.value("limit_group_index", cfg.limit_group_index);
    cfg.cost_efficiency_axis = doc.value("cost_efficiency_axis", cfg.cost_efficiency_axis);
    cfg.floor_margin = doc.value("floor_margin", cfg.floor_margin);
    cfg.eval_year = opt<double>(doc, "eval_year");
    if (doc.contains("lengths_m"))
        cfg.lengths_m = doc.at("lengths_m").get<std::vector<double>>();
    for (const auto& l : doc.at("links"))
        cfg.links.push_back(parse_link_spec(l));
    out.value = std::move(cfg);
    return out;
}

Parsed<NetworkConfig> parse_network_config(const json& doc)
{
    Parsed<NetworkConfig> out;
    out.diagnostics = validate_document(ConfigKind::network, doc);
    if (!out.diagnostics.empty())
        return out;

    NetworkConfig cfg;
    cfg.seed = opt<std::uint64_t>(doc, "seed");
    cfg.eval_year = opt<double>(doc, "eval_year");
    const auto& mesh = doc.at("mesh");
    cfg.rows = mesh.at("rows").get<int>();
    cfg.cols = mesh.at("cols").get<int>();
    cfg.spacing_m = mesh.at("spacing_m").get<double>();

    for (const auto& n : doc.at("networks")) {
        NetworkCase c;
        c.label = n.at("label").get<std::string>();
        c.technology = *parse_technology(n.at("technology").get<std::string>());
        if (auto ex = n.find("express"); ex != n.end())
            c.express = std::make_pair(ex->at("hop_span").get<int>(),
                                       *parse_technology(ex->at("technology").get<std::string>()));
        cfg.networks.push_back(std::move(c));
    }

    const auto& t = doc.at("traffic");
    cfg.traffic.pattern = *parse_traffic_pattern(t.at("pattern").get<std::string>());
    cfg.traffic.injection_rate_bps = t.at("injection_rate_bps").get<double>();
    cfg.traffic.hotspot_fraction = t.value("hotspot_fraction", 0.0);
    if (t.contains("hotspot_nodes"))
        cfg.traffic.hotspot_nodes = t.at("hotspot_nodes").get<std::vector<NodeId>>();
    cfg.traffic.hotspot_count = t.value("hotspot_count", 1);
    if (t.contains("locality_lambda_hops"))
        cfg.traffic.locality_lambda_hops = t.at("locality_lambda_hops").get<double>();
    cfg.traffic.injection_jitter = t.value("injection_jitter", 0.0);

    const auto& noc = doc.at("noc");
    cfg.noc.flit_bits = noc.at("flit_bits").get<int>();
    cfg.noc.router_clock_hz = noc.at("router_clock_hz").get<double>();
    cfg.noc.router_pipeline_clks = noc.at("router_pipeline_clks").get<int>();
    const auto& router = noc.at("router");
    cfg.noc.router.dynamic_j_per_bit = router.at("dynamic_j_per_bit").get<double>();
    cfg.noc.router.area_m2 = router.at("area_m2").get<double>();
    cfg.noc.router.die = router.value("die", std::string("electronic"));
    for (const auto& [name, entry] : noc.at("links").items()) {
        LinkTechnology lt;
        lt.latency_clks = entry.at("latency_clks").get<int>();
        lt.rate_bps = entry.at("rate_bps").get<double>();
        lt.link = parse_link_spec(entry.at("link"));
        cfg.noc.links.emplace(*parse_technology(name), std::move(lt));
    }
    for (const auto& [die, entry] : noc.at("wafers").items())
        cfg.noc.wafers.emplace(die, WaferCost{entry.at("usd_per_m2").get<double>(),
                                              parse_trend(entry, "cost_trend")});
    if (doc.contains("flit_sweep"))
        cfg.flit_sweep = doc.at("flit_sweep").get<std::vector<int>>();
    out.value = std::move(cfg);
    return out;
}

MeshTopology build_case_topology(const NetworkConfig& config, const NetworkCase& c)
{
    auto topology = build_mesh(config.rows, config.cols, config.spacing_m, c.technology);
    if (c.express)
        topology = add_express_links(std::move(topology), c.express->first, c.express->second);
    return topology;
}

} // namespace clear::cli
