#include "clear/cli/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    using namespace clear::cli;

    CLI::App app{"Evaluate CLEAR figures of merit for devices, links, networks and systems"};
    app.require_subcommand(1);

    RunManifest manifest;
    manifest.out_dir = default_out_dir();
    std::string config;
    std::string out_dir;
    std::vector<std::string> formats;

    const std::pair<Command, const char*> commands[] = {
        {Command::limits, "Physical limit sets at a temperature"},
        {Command::device, "Device-level CLEAR and radar scores"},
        {Command::link, "Link-level CLEAR over a length sweep"},
        {Command::network, "Mesh NoC CLEAR and flit-size sweep"},
        {Command::trend, "Growth fit over system records, or an experience-curve fit"},
    };
    for (const auto& [command, help] : commands) {
        const std::string name = [&] {
            switch (command) {
            case Command::limits: return "limits";
            case Command::device: return "device";
            case Command::link: return "link";
            case Command::network: return "network";
            case Command::trend: return "trend";
            }
            return "";
        }();
        auto* sub = app.add_subcommand(name, help);
        sub->callback([&manifest, command = command] { manifest.command = command; });
        sub->add_option("--config", config, "Config document (JSON, or CSV for trend)");
        sub->add_option("--out", out_dir,
                        std::string("Output directory (default $") + out_dir_env + " or clear-out)");
        sub->add_option("--format", formats, "Comma-separated subset of table,csv,json,radar_csv")
            ->delimiter(',');
        sub->add_option("--seed", manifest.seed, "Traffic generator seed");
        sub->add_option("--eval-year", manifest.eval_year, "Year at which costs are evaluated");
        sub->add_option("--temperature", manifest.temperature_k, "Temperature in K");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[validation] argv: " << e.what() << "\n";
        return exit_code::validation;
    }

    if (!config.empty())
        manifest.config = config;
    if (!out_dir.empty())
        manifest.out_dir = out_dir;
    if (!formats.empty()) {
        manifest.formats.clear();
        for (const auto& f : formats) {
            const auto parsed = parse_output_format(f);
            if (!parsed) {
                std::cerr << "error[validation] --format: unknown format '" << f << "'\n";
                return exit_code::validation;
            }
            manifest.formats.insert(*parsed);
        }
    }
    return run(manifest, std::cout, std::cerr);
}
