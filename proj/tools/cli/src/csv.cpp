#include "clear/cli/csv.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>

namespace clear::cli {

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    return lines;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> to_double(std::string_view s)
{
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::string header_of(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty())
        return {};
    std::string h;
    for (auto f : split_fields(lines.front()))
        h += (h.empty() ? "" : ",") + std::string(f);
    // tolerate a UTF-8 byte order mark
    if (h.rfind("\xEF\xBB\xBF", 0) == 0)
        h.erase(0, 3);
    return h;
}

template <class Row, class Fill>
CsvParsed<Row> parse_rows(std::string_view text, std::string_view header, std::size_t columns,
                          Fill&& fill)
{
    CsvParsed<Row> out;
    const auto lines = split_lines(text);
    if (lines.empty() || header_of(text) != header) {
        out.diagnostics.push_back({"line:1", "expected header '" + std::string(header) + "'"});
        return out;
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty())
            continue;
        const std::string where = "line:" + std::to_string(i + 1);
        const auto fields = split_fields(lines[i]);
        if (fields.size() != columns) {
            out.diagnostics.push_back({where, "expected " + std::to_string(columns) +
                                                  " fields, got " + std::to_string(fields.size())});
            continue;
        }
        Row row{};
        const auto before = out.diagnostics.size();
        fill(fields, row, where, out.diagnostics);
        if (out.diagnostics.size() == before)
            out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace

std::optional<CsvKind> detect_csv_kind(std::string_view text)
{
    const auto h = header_of(text);
    if (h == system_record_header)
        return CsvKind::system_records;
    if (h == cost_observation_header)
        return CsvKind::cost_observations;
    return std::nullopt;
}

CsvParsed<SystemRecord> parse_system_records(std::string_view text)
{
    return parse_rows<SystemRecord>(
        text, system_record_header, 8,
        [](const auto& f, SystemRecord& r, const std::string& where, Diagnostics& diags) {
            r.name = std::string(f[0]);
            const char* names[] = {"year", "mips", "clock_period_s", "energy_j_per_bit",
                                   "volume_m3", "cost_usd"};
            double* slots[] = {&r.year, &r.mips, &r.clock_period_s, &r.energy_j_per_bit,
                               &r.volume_m3, &r.cost_usd};
            for (int k = 0; k < 6; ++k) {
                const auto v = to_double(f[k + 1]);
                if (!v) {
                    diags.push_back({where, std::string(names[k]) + ": not a number"});
                    continue;
                }
                if (k > 0 && !(*v > 0))
                    diags.push_back({where, std::string(names[k]) + " must be > 0"});
                *slots[k] = *v;
            }
            const auto cls = parse_system_class(f[7]);
            if (!cls)
                diags.push_back({where, "class: unknown value '" + std::string(f[7]) + "'"});
            else
                r.system_class = *cls;
        });
}

CsvParsed<CostObservation> parse_cost_observations(std::string_view text)
{
    return parse_rows<CostObservation>(
        text, cost_observation_header, 2,
        [](const auto& f, CostObservation& o, const std::string& where, Diagnostics& diags) {
            const auto year = to_double(f[0]);
            const auto cost = to_double(f[1]);
            if (!year)
                diags.push_back({where, "year: not a number"});
            if (!cost)
                diags.push_back({where, "cost_usd: not a number"});
            else if (!(*cost > 0))
                diags.push_back({where, "cost_usd must be > 0"});
            if (year && cost) {
                o.year = *year;
                o.cost_usd = *cost;
            }
        });
}

std::string format_number(double value)
{
    return fmt::format("{}", value);
}

CsvWriter::CsvWriter(std::initializer_list<std::string_view> header)
{
    for (auto h : header)
        field(h);
    end_row();
}

CsvWriter& CsvWriter::field(std::string_view text)
{
    if (row_open_)
        text_ += ',';
    row_open_ = true;
    if (text.find_first_of(",\"\n") == std::string_view::npos) {
        text_ += text;
        return *this;
    }
    text_ += '"';
    for (char c : text) {
        if (c == '"')
            text_ += '"';
        text_ += c;
    }
    text_ += '"';
    return *this;
}

CsvWriter& CsvWriter::field(double value)
{
    return field(std::string_view(format_number(value)));
}

CsvWriter& CsvWriter::field(long long value)
{
    return field(std::string_view(fmt::format("{}", value)));
}

void CsvWriter::end_row()
{
    text_ += '\n';
    row_open_ = false;
}

} // namespace clear::cli
