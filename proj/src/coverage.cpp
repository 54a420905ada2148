#include "halobeam/coverage.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "halobeam/parallel.hpp"

namespace halobeam {

namespace {

constexpr double kQuarterTurnEps = 1e-12;

std::size_t sample_count(double t_start_h, double t_end_h, double step_h) {
    if (t_end_h < t_start_h) {
        throw std::invalid_argument("time window end must not precede its start");
    }
    if (!(step_h > 0.0)) {
        throw std::invalid_argument("sample step must be positive");
    }
    return static_cast<std::size_t>(std::floor((t_end_h - t_start_h) / step_h + 1e-9)) + 1;
}

}  // namespace

LunarGrid LunarGrid::build(double d_theta_deg, double d_phi_deg, double moon_radius_km) {
    if (!(d_theta_deg > 0.0) || !(d_phi_deg > 0.0)) {
        throw std::invalid_argument("grid sampling intervals must be positive");
    }
    if (!(moon_radius_km > 0.0)) {
        throw std::invalid_argument("moon radius must be positive");
    }
    LunarGrid grid;
    grid.d_theta_rad_ = deg_to_rad(d_theta_deg);
    grid.d_phi_rad_ = deg_to_rad(d_phi_deg);
    grid.moon_radius_km_ = moon_radius_km;

    const auto n_lat = static_cast<std::size_t>(std::llround(180.0 / d_theta_deg));
    const auto n_lon = static_cast<std::size_t>(std::llround(360.0 / d_phi_deg));
    grid.cells_.reserve(n_lat * n_lon);
    const double r2 = moon_radius_km * moon_radius_km;
    for (std::size_t i = 0; i < n_lat; ++i) {
        const double lat_deg = -90.0 + (static_cast<double>(i) + 0.5) * d_theta_deg;
        const double lat = deg_to_rad(lat_deg);
        const double w = std::cos(lat) * grid.d_theta_rad_ * grid.d_phi_rad_ * r2;
        for (std::size_t j = 0; j < n_lon; ++j) {
            const double lon_deg = -180.0 + (static_cast<double>(j) + 0.5) * d_phi_deg;
            const double lon = deg_to_rad(lon_deg);
            GridCell cell;
            cell.lat_rad = lat;
            cell.lon_rad = lon;
            cell.surface_point = Vector3{std::cos(lat) * std::cos(lon),
                                         std::cos(lat) * std::sin(lon),
                                         std::sin(lat)} *
                                 moon_radius_km;
            cell.weight_km2 = w;
            cell.far_side = std::abs(lon) >= std::numbers::pi / 2.0 - kQuarterTurnEps;
            cell.far_side_south_pole =
                cell.far_side && lat_deg > -90.0 && lat_deg < -80.0;
            grid.cells_.push_back(cell);
        }
    }
    return grid;
}

bool Region::contains(const GridCell& cell) const {
    switch (kind) {
        case RegionKind::lfs:
            return cell.far_side;
        case RegionKind::lfs_south_pole:
            return cell.far_side_south_pole;
        case RegionKind::box: {
            const double lat = rad_to_deg(cell.lat_rad);
            const double lon = rad_to_deg(cell.lon_rad);
            return lat >= lat_min_deg && lat <= lat_max_deg && lon >= lon_min_deg &&
                   lon <= lon_max_deg;
        }
    }
    return false;
}

double central_angle_limit(double sat_distance_km, double moon_radius_km) {
    if (!(moon_radius_km > 0.0)) {
        throw std::invalid_argument("moon radius must be positive");
    }
    if (!(sat_distance_km > moon_radius_km)) {
        throw std::invalid_argument("satellite must be above the lunar surface");
    }
    return std::numbers::pi / 2.0 - std::asin(moon_radius_km / sat_distance_km);
}

bool cell_covered(const GridCell& cell, const Vector3& sat_pos_body_km, double beta_rad) {
    return angle_between(cell.surface_point, sat_pos_body_km) < beta_rad;
}

double scp_percent(const LunarGrid& grid, const Region& region,
                   const std::vector<std::uint8_t>& covered) {
    const auto& cells = grid.cells();
    if (covered.size() != cells.size()) {
        throw std::invalid_argument("covered flags must be indexed like the grid");
    }
    double total = 0.0;
    double hit = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!region.contains(cells[i])) continue;
        total += cells[i].weight_km2;
        if (covered[i]) hit += cells[i].weight_km2;
    }
    if (total == 0.0) {
        throw std::invalid_argument("region selects no grid cells");
    }
    return 100.0 * hit / total;
}

bool earth_visible(const Vector3& sat_pos, const SystemState& state, double moon_radius_km) {
    return !segment_intersects_sphere(sat_pos, state.earth_center, state.moon_center,
                                      moon_radius_km);
}

bool station_visible(const Vector3& sat_pos, const SystemState& state, double moon_radius_km) {
    for (const auto& station : state.ground_stations) {
        const Vector3 up = station - state.earth_center;
        // Above the local horizon; for a spherical Earth this is the Earth-blockage test.
        if ((sat_pos - station).dot(up) <= 0.0) continue;
        if (!segment_intersects_sphere(sat_pos, station, state.moon_center, moon_radius_km)) {
            return true;
        }
    }
    return false;
}

CoverageResult coverage_snapshot(SimulationInstant t, const ConstellationSpec& spec,
                                 const LunarGrid& grid, const Region& region,
                                 const GeometricParameters& geo, const TemporalParameters& tem) {
    const SystemState state = system_state(t, geo, tem);
    const std::vector<Vector3> sats = satellite_positions(t, spec, state);
    const Rotation3 to_body = state.moon_body_frame.transposed();

    CoverageResult result;
    result.satellites_body.reserve(sats.size());
    std::vector<double> betas;
    betas.reserve(sats.size());
    for (const auto& sat : sats) {
        const Vector3 body = to_body.apply(sat - state.moon_center);
        result.satellites_body.push_back(body);
        betas.push_back(central_angle_limit(body.norm(), geo.moon_radius_km));
    }

    const auto& cells = grid.cells();
    result.covered.assign(cells.size(), 0);
    result.per_satellite_covered.assign(sats.size(), std::vector<std::uint8_t>(cells.size(), 0));
    double min_los = std::numeric_limits<double>::infinity();
    double max_los = -std::numeric_limits<double>::infinity();
    bool all_region_covered = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const bool in_region = region.contains(cells[i]);
        bool any = false;
        for (std::size_t s = 0; s < sats.size(); ++s) {
            if (!cell_covered(cells[i], result.satellites_body[s], betas[s])) continue;
            result.per_satellite_covered[s][i] = 1;
            any = true;
            if (in_region) {
                const double los = (result.satellites_body[s] - cells[i].surface_point).norm();
                min_los = std::min(min_los, los);
                max_los = std::max(max_los, los);
            }
        }
        result.covered[i] = any ? 1 : 0;
        if (in_region && !any) all_region_covered = false;
    }
    result.scp_percent = scp_percent(grid, region, result.covered);
    result.region_fully_covered = all_region_covered;
    const bool any_covered = std::isfinite(min_los);
    result.min_los_km = any_covered ? min_los : std::numeric_limits<double>::quiet_NaN();
    result.max_los_km = any_covered ? max_los : std::numeric_limits<double>::quiet_NaN();
    return result;
}

CoverageTimeline coverage_timeline(const ConstellationSpec& spec, const LunarGrid& grid,
                                   const Region& region, const GeometricParameters& geo,
                                   const TemporalParameters& tem, double t_start_h,
                                   double t_end_h, double step_h, unsigned threads) {
    const std::size_t n = sample_count(t_start_h, t_end_h, step_h);
    CoverageTimeline timeline;
    timeline.samples.resize(n);

    parallel_for(n, threads, [&](std::size_t i) {
        const SimulationInstant t{t_start_h + static_cast<double>(i) * step_h};
        const CoverageResult snap = coverage_snapshot(t, spec, grid, region, geo, tem);
        const SystemState state = system_state(t, geo, tem);
        const std::vector<Vector3> sats = satellite_positions(t, spec, state);

        CoverageSample& sample = timeline.samples[i];
        sample.t_h = t.t_h;
        sample.scp_percent = snap.scp_percent;
        sample.region_fully_covered = snap.region_fully_covered;
        sample.min_los_km = snap.min_los_km;
        sample.max_los_km = snap.max_los_km;
        sample.earth_visible.reserve(sats.size());
        for (const auto& sat : sats) {
            sample.earth_visible.push_back(earth_visible(sat, state, geo.moon_radius_km) ? 1 : 0);
        }
    });

    std::size_t full = 0;
    double min_scp = std::numeric_limits<double>::infinity();
    double max_scp = -std::numeric_limits<double>::infinity();
    double min_los = std::numeric_limits<double>::infinity();
    double max_los = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const CoverageSample& s = timeline.samples[i];
        if (s.region_fully_covered) ++full;
        if (s.scp_percent < min_scp) {
            min_scp = s.scp_percent;
            timeline.min_scp_sample_index = i;
        }
        max_scp = std::max(max_scp, s.scp_percent);
        if (std::isfinite(s.min_los_km)) {
            min_los = std::min(min_los, s.min_los_km);
            max_los = std::max(max_los, s.max_los_km);
        }
    }
    timeline.full_coverage_rate = static_cast<double>(full) / static_cast<double>(n);
    timeline.min_scp_percent = min_scp;
    timeline.max_scp_percent = max_scp;
    timeline.min_los_km = std::isfinite(min_los) ? min_los : std::numeric_limits<double>::quiet_NaN();
    timeline.max_los_km = std::isfinite(max_los) ? max_los : std::numeric_limits<double>::quiet_NaN();
    return timeline;
}

}  // namespace halobeam
