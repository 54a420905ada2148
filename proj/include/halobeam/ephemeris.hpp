#pragma once

#include <vector>

#include "halobeam/geometry.hpp"

namespace halobeam {

/// Geometric Earth-Moon system parameters (lengths in km, angles in degrees).
struct GeometricParameters {
    double earth_radius_km = 6371.0;
    double moon_radius_km = 1737.4;
    double lunar_orbit_radius_km = 385000.0;
    double emlp2_moon_distance_km = 64500.0;
    double earth_obliquity_deg = 23.44;
    // Obliquity to the lunar orbit plane; carried for completeness but not part
    // of the frame stack (the ecliptic-referenced value below is what tilts the
    // spin axis; applying both would double-count).
    double lunar_obliquity_deg = 6.68;
    double lunar_obliquity_ecliptic_deg = 1.54;
    double lunar_orbit_inclination_deg = 5.14;

    void validate() const;
};

/// Temporal parameters (hours).
struct TemporalParameters {
    double earth_rotation_period_h = 24.0;
    double moon_period_h = 648.0;
    double halo_period_h = 192.0;
    double sim_duration_h = 648.0;
    double sample_step_h = 1.0;

    void validate() const;
};

/// One sampled instant, hours since epoch.
struct SimulationInstant {
    double t_h = 0.0;
};

/// Ground station site in geodetic-on-a-sphere coordinates.
struct GroundStationSite {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

/// Positions and orientations of every system element at one instant.
///
/// Inertial frame: Earth-centered, ecliptic x-y plane, z = ecliptic north.
/// Epoch t=0 puts the Moon at its ascending node along +x with phase zero.
struct SystemState {
    Vector3 earth_center;        // fixed at the origin
    Vector3 moon_center;         // km
    Rotation3 moon_body_frame;   // moon body -> inertial
    Vector3 emlp2;               // km
    Rotation3 earth_spin_frame;  // ECEF -> inertial
    Vector3 lunar_orbit_normal;  // unit normal of the lunar orbit plane
    std::vector<Vector3> ground_stations;  // km, inertial
};

/// Unit normal of the lunar orbit plane (inclined to the ecliptic about +x).
Vector3 lunar_orbit_normal(const GeometricParameters& geo);

/// Kinematic state of the Earth-Moon-EMLP-2 system at instant `t`.
///
/// The Moon moves on a circular orbit of radius lunar_orbit_radius_km at
/// constant rate 360 deg / moon_period_h; its body frame is tidally locked
/// with body +x pointing at the Earth center and the spin axis rolled by the
/// ecliptic obliquity about that axis. EMLP-2 sits emlp2_moon_distance_km
/// beyond the Moon on the extended Earth-Moon line.
SystemState system_state(SimulationInstant t, const GeometricParameters& geo,
                         const TemporalParameters& tem,
                         const std::vector<GroundStationSite>& stations = {});

/// Inertial positions of ground stations on the rotating Earth sphere.
/// Latitudes must lie in [-90, 90] and longitudes in [-180, 180] degrees.
std::vector<Vector3> ground_station_positions(SimulationInstant t,
                                              const GeometricParameters& geo,
                                              const TemporalParameters& tem,
                                              const std::vector<GroundStationSite>& stations);

}  // namespace halobeam
