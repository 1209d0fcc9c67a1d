#pragma once

#include "clear/cli/diagnostic.hpp"
#include "clear/device.hpp"
#include "clear/link.hpp"
#include "clear/network.hpp"
#include "clear/traffic.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clear::cli {

enum class ConfigKind
{
    device,
    link,
    network,
};

std::string_view schema_name(ConfigKind kind);

struct DeviceConfig
{
    double temperature_k = 300.0;
    double particle_mass_kg = codata2018.electron_mass;
    double cost_efficiency_axis = default_cost_efficiency_axis;
    double floor_margin = 10.0;
    std::optional<double> eval_year;
    std::vector<DeviceSpec> devices;
};

struct LinkConfig
{
    double temperature_k = 300.0;
    double particle_mass_kg = codata2018.electron_mass;
    double limit_group_index = 3.0;
    double cost_efficiency_axis = default_cost_efficiency_axis;
    double floor_margin = 10.0;
    std::optional<double> eval_year;
    std::vector<double> lengths_m; // empty: each link at its own length
    std::vector<LinkSpec> links;
};

struct NetworkCase
{
    std::string label;
    Technology technology = Technology::electronic;
    std::optional<std::pair<int, Technology>> express; // hop span, technology
};

struct NetworkConfig
{
    std::optional<std::uint64_t> seed;
    std::optional<double> eval_year;
    int rows = 0;
    int cols = 0;
    double spacing_m = 0;
    std::vector<NetworkCase> networks;
    TrafficParams traffic;
    NocConfig noc;
    std::vector<int> flit_sweep;
};

/// Schema check plus the cross-field rules the schema cannot express.
/// Never throws for malformed documents; all findings are returned.
Diagnostics validate_document(ConfigKind kind, const nlohmann::json& document);

/// Each parse runs validate_document first and returns the diagnostics
/// instead of a value when there are any.
template <class T>
struct Parsed
{
    std::optional<T> value;
    Diagnostics diagnostics;
};

Parsed<DeviceConfig> parse_device_config(const nlohmann::json& document);
Parsed<LinkConfig> parse_link_config(const nlohmann::json& document);
Parsed<NetworkConfig> parse_network_config(const nlohmann::json& document);

MeshTopology build_case_topology(const NetworkConfig& config, const NetworkCase& c);

} // namespace clear::cli
