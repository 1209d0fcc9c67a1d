#pragma once

#include "clear/cli/diagnostic.hpp"
#include "clear/economics.hpp"
#include "clear/trend.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clear::cli {

inline constexpr std::string_view system_record_header =
    "name,year,mips,clock_period_s,energy_j_per_bit,volume_m3,cost_usd,class";
inline constexpr std::string_view cost_observation_header = "year,cost_usd";

enum class CsvKind
{
    system_records,
    cost_observations,
};

/// Identifies a CSV document by its header line.
std::optional<CsvKind> detect_csv_kind(std::string_view text);

template <class T>
struct CsvParsed
{
    std::vector<T> rows;
    Diagnostics diagnostics; // path is "line:N"
};

CsvParsed<SystemRecord> parse_system_records(std::string_view text);
CsvParsed<CostObservation> parse_cost_observations(std::string_view text);

/// Shortest representation that round-trips; identical on every platform.
std::string format_number(double value);

/// Builds LF-terminated CSV text. Fields containing ',' or '"' are quoted.
class CsvWriter
{
public:
    explicit CsvWriter(std::initializer_list<std::string_view> header);

    CsvWriter& field(std::string_view text);
    CsvWriter& field(double value);
    CsvWriter& field(long long value);
    CsvWriter& field(int value) { return field(static_cast<long long>(value)); }
    CsvWriter& field(std::size_t value) { return field(static_cast<long long>(value)); }
    void end_row();

    const std::string& str() const { return text_; }

private:
    std::string text_;
    bool row_open_ = false;
};

} // namespace clear::cli
