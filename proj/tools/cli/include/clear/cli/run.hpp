#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace clear::cli {

enum class Command
{
    limits,
    device,
    link,
    network,
    trend,
};

enum class OutputFormat
{
    table,
    csv,
    json,
    radar_csv,
};

std::optional<Command> parse_command(std::string_view text);
std::optional<OutputFormat> parse_output_format(std::string_view text);

struct RunManifest
{
    Command command = Command::limits;
    std::optional<std::filesystem::path> config;
    std::filesystem::path out_dir = "clear-out";
    std::set<OutputFormat> formats{OutputFormat::table, OutputFormat::csv, OutputFormat::json};
    std::optional<std::uint64_t> seed;
    std::optional<double> eval_year;
    std::optional<double> temperature_k;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 1;
inline constexpr int infeasible = 2;
inline constexpr int io = 3;
} // namespace exit_code

/// Environment variable naming the default output directory.
inline constexpr const char* out_dir_env = "CLEAR_OUT_DIR";

std::filesystem::path default_out_dir();

/// A file produced by a run, relative to the output directory.
struct Artifact
{
    std::string relative_path;
    std::string content;
};

/// Writes every artifact to a temporary sibling first and renames only once
/// all of them are on disk. On failure no artifact is left behind.
/// Throws std::filesystem::filesystem_error or std::runtime_error.
void write_artifacts(const std::filesystem::path& dir, const std::vector<Artifact>& artifacts);

/// Executes one command. Diagnostics go to `err`, one line each, as
/// `error[<kind>] <path>: <message>`; the summary table goes to `out`.
int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

} // namespace clear::cli
