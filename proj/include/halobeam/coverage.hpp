#pragma once

#include <cstdint>
#include <vector>

#include "halobeam/constellation.hpp"
#include "halobeam/ephemeris.hpp"
#include "halobeam/geometry.hpp"

namespace halobeam {

/// One cell of the selenographic sampling grid. Latitude/longitude are the
/// cell-center angles in the moon body frame (longitude 0 = sub-Earth point);
/// the surface point sits on the moon sphere and the weight is the cell area
/// element r^2 cos(theta) dtheta dphi.
struct GridCell {
    double lat_rad = 0.0;
    double lon_rad = 0.0;
    Vector3 surface_point;  // body frame, km
    double weight_km2 = 0.0;
    bool far_side = false;             // |lon| >= 90 deg
    bool far_side_south_pole = false;  // far side and lat in (-90, -80) deg
};

/// Uniform lat/lon grid with cell centers at half-interval offsets, so no row
/// sits exactly on a pole and no column duplicates the +-180 deg seam.
class LunarGrid {
  public:
    static LunarGrid build(double d_theta_deg, double d_phi_deg, double moon_radius_km);

    const std::vector<GridCell>& cells() const { return cells_; }
    double d_theta_rad() const { return d_theta_rad_; }
    double d_phi_rad() const { return d_phi_rad_; }
    double moon_radius_km() const { return moon_radius_km_; }

  private:
    std::vector<GridCell> cells_;
    double d_theta_rad_ = 0.0;
    double d_phi_rad_ = 0.0;
    double moon_radius_km_ = 0.0;
};

enum class RegionKind {
    lfs,             // full lunar far side
    lfs_south_pole,  // far side, latitude in (-90, -80) deg
    box,             // explicit lat/lon box
};

struct Region {
    RegionKind kind = RegionKind::lfs;
    double lat_min_deg = -90.0;
    double lat_max_deg = 90.0;
    double lon_min_deg = -180.0;
    double lon_max_deg = 180.0;

    bool contains(const GridCell& cell) const;
};

/// Central angle limit beta = pi/2 - arcsin(r_M / d) for a satellite at
/// distance `sat_distance_km` from the moon center (zero-elevation horizon).
/// Throws std::invalid_argument unless sat_distance_km > moon_radius_km.
double central_angle_limit(double sat_distance_km, double moon_radius_km);

/// True iff the central angle between the cell's surface point and the
/// satellite (both in the moon body frame) is strictly below `beta_rad`.
bool cell_covered(const GridCell& cell, const Vector3& sat_pos_body_km, double beta_rad);

/// Area-weighted covered percentage over the cells of `region`.
/// Throws std::invalid_argument if `covered` is mis-sized or the region is empty.
double scp_percent(const LunarGrid& grid, const Region& region,
                   const std::vector<std::uint8_t>& covered);

/// True iff the segment from the satellite to the Earth center clears the
/// moon sphere.
bool earth_visible(const Vector3& sat_pos, const SystemState& state, double moon_radius_km);

/// Optional station-level flag: some station sees the satellite above its
/// horizon with the segment clearing the moon sphere.
bool station_visible(const Vector3& sat_pos, const SystemState& state, double moon_radius_km);

/// Coverage of the grid by every satellite at a single instant.
struct CoverageResult {
    std::vector<std::uint8_t> covered;  // per cell, union over satellites
    std::vector<std::vector<std::uint8_t>> per_satellite_covered;
    double scp_percent = 0.0;
    bool region_fully_covered = false;
    double min_los_km = 0.0;  // over covered region cells; NaN when none covered
    double max_los_km = 0.0;
    std::vector<Vector3> satellites_body;  // satellite positions, body frame
};

CoverageResult coverage_snapshot(SimulationInstant t, const ConstellationSpec& spec,
                                 const LunarGrid& grid, const Region& region,
                                 const GeometricParameters& geo, const TemporalParameters& tem);

struct CoverageSample {
    double t_h = 0.0;
    double scp_percent = 0.0;
    bool region_fully_covered = false;
    std::vector<std::uint8_t> earth_visible;  // per satellite
    double min_los_km = 0.0;
    double max_los_km = 0.0;
};

struct CoverageTimeline {
    std::vector<CoverageSample> samples;
    double full_coverage_rate = 0.0;  // fraction of samples with SCP = 100%
    double min_scp_percent = 0.0;
    double max_scp_percent = 0.0;
    std::size_t min_scp_sample_index = 0;
    double min_los_km = 0.0;  // extremes across all samples
    double max_los_km = 0.0;
};

/// Samples coverage at t = t_start, t_start + step, ..., t_end (inclusive).
/// Samples are computed independently, so the result does not depend on the
/// worker count.
CoverageTimeline coverage_timeline(const ConstellationSpec& spec, const LunarGrid& grid,
                                   const Region& region, const GeometricParameters& geo,
                                   const TemporalParameters& tem, double t_start_h,
                                   double t_end_h, double step_h, unsigned threads = 0);

}  // namespace halobeam
