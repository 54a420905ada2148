#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "halobeam/csv.hpp"
#include "halobeam/parallel.hpp"
#include "halobeam/rng.hpp"
#include "halobeam/scenario.hpp"

namespace halobeam {

namespace {

namespace fs = std::filesystem;

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_valid(const ScenarioConfig& config) {
    const ValidationReport report = validate_config(config);
    if (!report.errors.empty()) {
        throw ConfigError(config.name + ": " + report.errors.front());
    }
}

std::string prepare_out_dir(const ScenarioConfig& config, const RunOptions& options) {
    const std::string dir = options.out_dir.empty() ? config.output_dir : options.out_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + dir + ": " + ec.message());
    }
    return dir;
}

void write_summary(const RunSummary& summary, const std::string& dir) {
    const std::string path = dir + "/summary.json";
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + path);
    out << summary.to_json();
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

RunSummary make_summary(const ScenarioConfig& config, const RunOptions& options) {
    RunSummary summary;
    summary.scenario = config.name;
    summary.config_hash = content_hash(serialize_config(config));
    summary.seed = options.seed.value_or(config.pointing.seed);
    return summary;
}

std::vector<double> window_samples(const TimeWindow& window) {
    const auto n = static_cast<std::size_t>(
                       std::floor((window.end_h - window.start_h) / window.step_h + 1e-9)) +
                   1;
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) {
        ts[i] = window.start_h + static_cast<double>(i) * window.step_h;
    }
    return ts;
}

}  // namespace

RunSummary run_coverage(const ScenarioConfig& config, const RunOptions& options,
                        CoverageTimeline* timeline_out) {
    const auto start = Clock::now();
    require_valid(config);
    RunSummary summary = make_summary(config, options);

    const LunarGrid grid =
        LunarGrid::build(config.grid.d_theta_deg, config.grid.d_phi_deg,
                         config.geometry.moon_radius_km);
    CoverageTimeline timeline = coverage_timeline(
        config.constellation, grid, config.region, config.geometry, config.temporal,
        config.window.start_h, config.window.end_h, config.window.step_h, options.threads);

    const std::string dir = prepare_out_dir(config, options);
    const std::size_t n_sats = timeline.samples.empty()
                                   ? 0
                                   : timeline.samples.front().earth_visible.size();

    CsvWriter csv(dir + "/timeline.csv");
    std::vector<std::string> header = {"t_h", "scp_percent"};
    for (std::size_t s = 0; s < n_sats; ++s) {
        header.push_back("visible_sat" + std::to_string(s));
    }
    header.push_back("min_los_km");
    header.push_back("max_los_km");
    csv.write_row(header);
    std::size_t visible_count = 0;
    for (const auto& sample : timeline.samples) {
        std::vector<std::string> row = {format_real(sample.t_h),
                                        format_real(sample.scp_percent)};
        for (std::uint8_t flag : sample.earth_visible) {
            row.push_back(flag ? "1" : "0");
            if (flag) ++visible_count;
        }
        row.push_back(format_real(sample.min_los_km));
        row.push_back(format_real(sample.max_los_km));
        csv.write_row(row);
    }
    csv.close();

    // Cell dump at the worst sample, one row per region cell with the index of
    // the first satellite covering it (-1 when uncovered).
    const double t_min = timeline.samples[timeline.min_scp_sample_index].t_h;
    const CoverageResult snap =
        coverage_snapshot(SimulationInstant{t_min}, config.constellation, grid, config.region,
                          config.geometry, config.temporal);
    CsvWriter cells(dir + "/min_scp_cells.csv");
    cells.write_row({"lat_deg", "lon_deg", "satellite_index"});
    const auto& grid_cells = grid.cells();
    for (std::size_t i = 0; i < grid_cells.size(); ++i) {
        if (!config.region.contains(grid_cells[i])) continue;
        int sat_index = -1;
        for (std::size_t s = 0; s < snap.per_satellite_covered.size(); ++s) {
            if (snap.per_satellite_covered[s][i]) {
                sat_index = static_cast<int>(s);
                break;
            }
        }
        cells.write_row({format_real(rad_to_deg(grid_cells[i].lat_rad)),
                         format_real(rad_to_deg(grid_cells[i].lon_rad)),
                         std::to_string(sat_index)});
    }
    cells.close();

    const double pair_count =
        static_cast<double>(timeline.samples.size()) * static_cast<double>(n_sats);
    summary.metrics["full_coverage_rate"] = timeline.full_coverage_rate;
    summary.metrics["min_scp_percent"] = timeline.min_scp_percent;
    summary.metrics["max_scp_percent"] = timeline.max_scp_percent;
    summary.metrics["min_los_km"] = timeline.min_los_km;
    summary.metrics["max_los_km"] = timeline.max_los_km;
    summary.metrics["earth_visible_fraction"] =
        pair_count > 0.0 ? static_cast<double>(visible_count) / pair_count : 0.0;
    summary.metrics["samples"] = static_cast<double>(timeline.samples.size());
    summary.metrics["satellites"] = static_cast<double>(n_sats);
    summary.wall_seconds = elapsed_seconds(start);
    write_summary(summary, dir);

    if (timeline_out) *timeline_out = std::move(timeline);
    return summary;
}

RunSummary run_visibility(const ScenarioConfig& config, const RunOptions& options) {
    const auto start = Clock::now();
    require_valid(config);
    RunSummary summary = make_summary(config, options);

    const std::vector<double> ts = window_samples(config.window);
    const std::size_t n_sats =
        config.constellation.kind == ConstellationKind::stable_emlp2
            ? 1
            : static_cast<std::size_t>(config.constellation.num_satellites);
    const bool with_stations = !config.stations.empty();

    std::vector<std::vector<std::uint8_t>> earth_flags(ts.size());
    std::vector<std::vector<std::uint8_t>> station_flags(ts.size());
    parallel_for(ts.size(), options.threads, [&](std::size_t i) {
        const SimulationInstant t{ts[i]};
        const SystemState state =
            system_state(t, config.geometry, config.temporal, config.stations);
        const std::vector<Vector3> sats = satellite_positions(t, config.constellation, state);
        earth_flags[i].reserve(sats.size());
        if (with_stations) station_flags[i].reserve(sats.size());
        for (const auto& sat : sats) {
            earth_flags[i].push_back(
                earth_visible(sat, state, config.geometry.moon_radius_km) ? 1 : 0);
            if (with_stations) {
                station_flags[i].push_back(
                    station_visible(sat, state, config.geometry.moon_radius_km) ? 1 : 0);
            }
        }
    });

    const std::string dir = prepare_out_dir(config, options);
    CsvWriter csv(dir + "/visibility.csv");
    std::vector<std::string> header = {"t_h"};
    for (std::size_t s = 0; s < n_sats; ++s) {
        header.push_back("visible_sat" + std::to_string(s));
    }
    if (with_stations) {
        for (std::size_t s = 0; s < n_sats; ++s) {
            header.push_back("dsns_visible_sat" + std::to_string(s));
        }
    }
    csv.write_row(header);
    std::size_t visible = 0;
    std::size_t station_visible_count = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::vector<std::string> row = {format_real(ts[i])};
        for (std::uint8_t flag : earth_flags[i]) {
            row.push_back(flag ? "1" : "0");
            if (flag) ++visible;
        }
        if (with_stations) {
            for (std::uint8_t flag : station_flags[i]) {
                row.push_back(flag ? "1" : "0");
                if (flag) ++station_visible_count;
            }
        }
        csv.write_row(row);
    }
    csv.close();

    const double pairs = static_cast<double>(ts.size() * n_sats);
    summary.metrics["visibility_fraction"] = static_cast<double>(visible) / pairs;
    if (with_stations) {
        summary.metrics["dsns_visibility_fraction"] =
            static_cast<double>(station_visible_count) / pairs;
    }
    summary.metrics["samples"] = static_cast<double>(ts.size());
    summary.metrics["satellites"] = static_cast<double>(n_sats);
    summary.wall_seconds = elapsed_seconds(start);
    write_summary(summary, dir);
    return summary;
}

namespace {

std::string metric_tag(double h_w) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%gw", h_w);
    std::string tag(buf);
    std::replace(tag.begin(), tag.end(), '.', 'p');
    return tag;
}

}  // namespace

RunSummary run_power_cdf(const ScenarioConfig& config, const RunOptions& options) {
    const auto start = Clock::now();
    require_valid(config);
    RunSummary summary = make_summary(config, options);

    double min_range_m = 0.0;
    double max_range_m = 0.0;
    if (!config.pointing.ranges_m.empty()) {
        min_range_m = *std::min_element(config.pointing.ranges_m.begin(),
                                        config.pointing.ranges_m.end());
        max_range_m = *std::max_element(config.pointing.ranges_m.begin(),
                                        config.pointing.ranges_m.end());
    } else {
        const LunarGrid grid =
            LunarGrid::build(config.grid.d_theta_deg, config.grid.d_phi_deg,
                             config.geometry.moon_radius_km);
        const CoverageTimeline timeline = coverage_timeline(
            config.constellation, grid, config.region, config.geometry, config.temporal,
            config.window.start_h, config.window.end_h, config.window.step_h, options.threads);
        if (!std::isfinite(timeline.min_los_km)) {
            throw ConfigError(config.name +
                              ": no covered cells, cannot derive line-of-sight ranges");
        }
        min_range_m = timeline.min_los_km * 1000.0;  // coverage works in km, the link in m
        max_range_m = timeline.max_los_km * 1000.0;
    }

    const std::string dir = prepare_out_dir(config, options);
    const PointingErrorModel model{config.pointing.sigma_rad};
    const std::uint64_t seed = summary.seed;
    const std::size_t n = static_cast<std::size_t>(config.pointing.n_samples);

    CsvWriter link_csv(dir + "/link_budget.csv");
    link_csv.write_row({"R_m", "phi_rad", "d_t_m", "g_t", "g_r", "c2_w", "gamma_rad", "p_h_w"});

    const std::pair<std::string, double> cases[] = {{"min", min_range_m}, {"max", max_range_m}};
    for (std::size_t idx = 0; idx < 2; ++idx) {
        const auto& [label, range_m] = cases[idx];
        const LinkGeometry geom = link_geometry(config.link, range_m);
        const HarvestedPowerDistribution dist =
            HarvestedPowerDistribution::make(config.link, geom, model);
        const EmpiricalCdf emp = monte_carlo_cdf(config.link, geom, model, n,
                                                 stream_seed(seed, idx), options.threads);
        const double ks = ks_statistic(emp, dist);

        for (double gamma : {0.0, config.pointing.sigma_rad}) {
            const LinkBudgetResult budget = harvested_power(config.link, geom, gamma);
            link_csv.write_row({format_real(geom.range_m), format_real(geom.phi_rad),
                                format_real(geom.d_t_m), format_real(geom.g_t),
                                format_real(geom.g_r), format_real(budget.c2_w),
                                format_real(gamma), format_real(budget.p_h_w)});
        }

        // Log-spaced evaluation grid over the representable support, plus the
        // reference powers quoted for the benchmark link.
        std::vector<double> hs;
        constexpr int kGridPoints = 160;
        for (int j = 0; j < kGridPoints; ++j) {
            const double frac = static_cast<double>(j) / (kGridPoints - 1);
            hs.push_back(dist.c2_w * std::pow(10.0, -12.0 * (1.0 - frac)));
        }
        for (double checkpoint : {1.6, 41.6}) {
            if (checkpoint > 0.0 && checkpoint <= dist.c2_w) hs.push_back(checkpoint);
        }
        std::sort(hs.begin(), hs.end());
        hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

        CsvWriter cdf_csv(dir + "/power_cdf_" + label + ".csv");
        cdf_csv.write_row({"h_w", "cdf_analytic", "cdf_empirical", "n", "seed", "sigma_rad",
                           "range_m"});
        for (double h : hs) {
            cdf_csv.write_row({format_real(h), format_real(dist.cdf(h)),
                               format_real(emp.evaluate(h)), std::to_string(n),
                               std::to_string(seed), format_real(config.pointing.sigma_rad),
                               format_real(range_m)});
        }
        cdf_csv.close();

        summary.metrics["range_m_" + label] = range_m;
        summary.metrics["c2_w_" + label] = dist.c2_w;
        summary.metrics["exponent_" + label] = dist.exponent();
        summary.metrics["ks_" + label] = ks;
        for (double checkpoint : {1.6, 41.6}) {
            const std::string tag = metric_tag(checkpoint);
            summary.metrics["cdf_" + tag + "_analytic_" + label] = dist.cdf(checkpoint);
            summary.metrics["cdf_" + tag + "_empirical_" + label] = emp.evaluate(checkpoint);
        }
    }
    link_csv.close();

    summary.metrics["sigma_rad"] = config.pointing.sigma_rad;
    summary.metrics["n_samples"] = static_cast<double>(n);
    summary.wall_seconds = elapsed_seconds(start);
    write_summary(summary, dir);
    return summary;
}

}  // namespace halobeam
