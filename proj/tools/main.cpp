#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "halobeam/csv.hpp"
#include "halobeam/scenario.hpp"

namespace {

using halobeam::RunOptions;
using halobeam::RunSummary;
using halobeam::ScenarioConfig;

struct CommonArgs {
    std::string config_path;
    std::string scenario;
    std::string out_dir;
    unsigned threads = 0;
    std::optional<std::uint64_t> seed;
};

void add_common_options(CLI::App* sub, CommonArgs& args) {
    auto* config = sub->add_option("--config", args.config_path, "Scenario config file (JSON)");
    auto* scenario =
        sub->add_option("--scenario", args.scenario, "Builtin scenario name (see list-scenarios)");
    config->excludes(scenario);
    sub->add_option("--out", args.out_dir, "Output directory (default: from the config)");
    sub->add_option("--threads", args.threads, "Worker threads (default: hardware concurrency)");
    sub->add_option("--seed", [&args](const CLI::results_t& res) {
        args.seed = std::stoull(res.front());
        return true;
    }, "Override the Monte Carlo seed")->expected(1);
}

ScenarioConfig resolve_config(const CommonArgs& args) {
    if (!args.scenario.empty()) {
        return halobeam::builtin_scenario(args.scenario);
    }
    if (!args.config_path.empty()) {
        return halobeam::load_config_file(args.config_path);
    }
    throw halobeam::ConfigError("one of --config or --scenario is required");
}

RunOptions resolve_options(const CommonArgs& args) {
    RunOptions options;
    options.out_dir = args.out_dir;
    options.threads = args.threads;
    options.seed = args.seed;
    return options;
}

void print_summary(const RunSummary& summary, const std::string& out_dir) {
    std::cout << "scenario: " << summary.scenario << " (config " << summary.config_hash << ")\n";
    for (const auto& [key, value] : summary.metrics) {
        std::cout << "  " << key << " = " << halobeam::format_real(value) << "\n";
    }
    std::cout << "outputs written to " << (out_dir.empty() ? std::string("config output_dir")
                                                           : out_dir)
              << " in " << summary.wall_seconds << " s\n";
}

int run_validate(const CommonArgs& args) {
    const ScenarioConfig config = resolve_config(args);
    const halobeam::ValidationReport report = halobeam::validate_config(config);
    for (const auto& e : report.errors) {
        std::cout << "error: " << e << "\n";
    }
    for (const auto& w : report.warnings) {
        std::cout << "warning: " << w << "\n";
    }
    if (report.clean()) {
        std::cout << "configuration " << config.name << " is clean\n";
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laser power beaming simulator: EMLP-2 halo satellites to lunar far-side receivers"};
    app.require_subcommand(1);

    CommonArgs args;
    auto* coverage = app.add_subcommand("coverage", "Surface-coverage timeline over a time window");
    auto* visibility = app.add_subcommand("visibility", "Per-satellite Earth-visibility trace");
    auto* power = app.add_subcommand("power-cdf", "Harvested-power distribution tables");
    auto* validate = app.add_subcommand("validate", "Check a scenario configuration");
    auto* list = app.add_subcommand("list-scenarios", "List builtin reproduction scenarios");
    for (auto* sub : {coverage, visibility, power, validate}) {
        add_common_options(sub, args);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (list->parsed()) {
            for (const auto& name : halobeam::builtin_scenario_names()) {
                std::cout << name << "\t" << halobeam::builtin_scenario_description(name) << "\n";
            }
            return 0;
        }
        if (validate->parsed()) {
            return run_validate(args);
        }
        const ScenarioConfig config = resolve_config(args);
        const RunOptions options = resolve_options(args);
        RunSummary summary;
        if (coverage->parsed()) {
            summary = halobeam::run_coverage(config, options);
        } else if (visibility->parsed()) {
            summary = halobeam::run_visibility(config, options);
        } else {
            summary = halobeam::run_power_cdf(config, options);
        }
        print_summary(summary, options.out_dir.empty() ? config.output_dir : options.out_dir);
        return 0;
    } catch (const halobeam::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const halobeam::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
