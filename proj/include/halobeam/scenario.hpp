#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halobeam/constellation.hpp"
#include "halobeam/coverage.hpp"
#include "halobeam/ephemeris.hpp"
#include "halobeam/errors.hpp"
#include "halobeam/link_budget.hpp"
#include "halobeam/pointing.hpp"

namespace halobeam {

struct GridSpec {
    double d_theta_deg = 1.0;
    double d_phi_deg = 1.0;
};

struct TimeWindow {
    double start_h = 0.0;
    double end_h = 192.0;
    double step_h = 1.0;
};

struct PointingBlock {
    double sigma_rad = 5e-9;
    std::uint64_t n_samples = 100000;
    std::uint64_t seed = 1064;
    // Explicit line-of-sight ranges (m). Empty: take the min/max covered
    // distances from a coverage run over the scenario window.
    std::vector<double> ranges_m;
};

/// One fully resolved scenario. Values default to the benchmark model
/// parameters; a config file only lists overrides.
struct ScenarioConfig {
    std::string name = "custom";
    GeometricParameters geometry;
    TemporalParameters temporal;
    ConstellationSpec constellation = ConstellationSpec::stable();
    Region region;
    GridSpec grid;
    TimeWindow window;
    LinkParameters link;
    PointingBlock pointing;
    std::vector<GroundStationSite> stations;
    std::string output_dir = "out";
};

/// Parses a scenario from JSON text. Every key is optional and defaulted;
/// unknown keys are hard errors reported with their field path.
ScenarioConfig parse_config(const std::string& json_text);

/// Reads and parses a config file; throws IoError if unreadable.
ScenarioConfig load_config_file(const std::string& path);

/// Canonical JSON serialization with every field resolved; parse and
/// serialize round-trip to identical text.
std::string serialize_config(const ScenarioConfig& config);

/// Builtin reproduction scenarios (fig5-*, fig6-*, fig7-*, fig8-*, table4-*, ...).
std::vector<std::string> builtin_scenario_names();
ScenarioConfig builtin_scenario(const std::string& name);
std::string builtin_scenario_description(const std::string& name);

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool clean() const { return errors.empty() && warnings.empty(); }
};

/// Range and consistency checks: parameter validity, the A_y >= 3671 km
/// Earth-visibility clearance, and the A_y = 0.343 A_z ratio (warning when
/// overridden).
ValidationReport validate_config(const ScenarioConfig& config);

struct RunOptions {
    std::string out_dir;                  // empty: config.output_dir
    unsigned threads = 0;                 // 0: hardware concurrency
    std::optional<std::uint64_t> seed;    // overrides config.pointing.seed
};

struct RunSummary {
    std::string scenario;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::map<std::string, double> metrics;
    double wall_seconds = 0.0;

    std::string to_json() const;
};

/// Coverage timeline over the scenario window; writes timeline.csv, a cell
/// dump at the minimum-SCP sample (min_scp_cells.csv), and summary.json.
RunSummary run_coverage(const ScenarioConfig& config, const RunOptions& options = {},
                        CoverageTimeline* timeline_out = nullptr);

/// Per-satellite Earth-visibility trace; writes visibility.csv and summary.json.
RunSummary run_visibility(const ScenarioConfig& config, const RunOptions& options = {});

/// Analytic + Monte Carlo harvested-power distributions for the min- and
/// max-distance parameterizations; writes power_cdf_min.csv, power_cdf_max.csv,
/// link_budget.csv, and summary.json.
RunSummary run_power_cdf(const ScenarioConfig& config, const RunOptions& options = {});

/// FNV-1a 64-bit content hash, hex encoded; keys the config in RunSummary.
std::string content_hash(std::string_view text);

}  // namespace halobeam
