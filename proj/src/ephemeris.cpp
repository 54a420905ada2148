#include "halobeam/ephemeris.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace halobeam {

namespace {

const Vector3 kXAxis{1.0, 0.0, 0.0};
const Vector3 kZAxis{0.0, 0.0, 1.0};

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

void GeometricParameters::validate() const {
    require(earth_radius_km > 0.0, "earth_radius_km must be positive");
    require(moon_radius_km > 0.0, "moon_radius_km must be positive");
    require(lunar_orbit_radius_km > 0.0, "lunar_orbit_radius_km must be positive");
    require(emlp2_moon_distance_km > 0.0, "emlp2_moon_distance_km must be positive");
    for (double a : {earth_obliquity_deg, lunar_obliquity_deg,
                     lunar_obliquity_ecliptic_deg, lunar_orbit_inclination_deg}) {
        require(a >= 0.0 && a < 90.0, "obliquity/inclination angles must lie in [0, 90) degrees");
    }
}

void TemporalParameters::validate() const {
    for (double p : {earth_rotation_period_h, moon_period_h, halo_period_h,
                     sim_duration_h, sample_step_h}) {
        require(p > 0.0, "temporal parameters must be positive");
    }
    require(sample_step_h <= sim_duration_h, "sample_step_h must not exceed sim_duration_h");
}

Vector3 lunar_orbit_normal(const GeometricParameters& geo) {
    return rotation_about_axis(kXAxis, deg_to_rad(geo.lunar_orbit_inclination_deg)).apply(kZAxis);
}

SystemState system_state(SimulationInstant t, const GeometricParameters& geo,
                         const TemporalParameters& tem,
                         const std::vector<GroundStationSite>& stations) {
    geo.validate();
    tem.validate();
    require(t.t_h >= 0.0, "simulation instant must be non-negative");

    const Rotation3 orbit_plane =
        rotation_about_axis(kXAxis, deg_to_rad(geo.lunar_orbit_inclination_deg));
    const double alpha = 2.0 * std::numbers::pi * t.t_h / tem.moon_period_h;

    SystemState state;
    state.earth_center = Vector3{0.0, 0.0, 0.0};
    state.moon_center = orbit_plane.apply({geo.lunar_orbit_radius_km * std::cos(alpha),
                                           geo.lunar_orbit_radius_km * std::sin(alpha), 0.0});
    state.lunar_orbit_normal = orbit_plane.apply(kZAxis);

    const Vector3 earth_to_moon = state.moon_center.normalized();
    state.emlp2 = state.moon_center + geo.emlp2_moon_distance_km * earth_to_moon;

    // Tidally locked body frame: +x at Earth, z seeded from the orbit normal,
    // then a fixed roll about the Earth-pointing axis tilts the spin axis by
    // the ecliptic obliquity. The roll preserves the tidal lock exactly.
    const Vector3 moon_to_earth = -earth_to_moon;
    const Vector3 body_y = state.lunar_orbit_normal.cross(moon_to_earth).normalized();
    const Rotation3 locked = Rotation3::from_columns(moon_to_earth, body_y, state.lunar_orbit_normal);
    state.moon_body_frame =
        locked * rotation_about_axis(kXAxis, deg_to_rad(geo.lunar_obliquity_ecliptic_deg));

    const double spin = 2.0 * std::numbers::pi * t.t_h / tem.earth_rotation_period_h;
    state.earth_spin_frame = rotation_about_axis(kXAxis, deg_to_rad(geo.earth_obliquity_deg)) *
                             rotation_about_axis(kZAxis, spin);

    state.ground_stations = ground_station_positions(t, geo, tem, stations);
    return state;
}

std::vector<Vector3> ground_station_positions(SimulationInstant t,
                                              const GeometricParameters& geo,
                                              const TemporalParameters& tem,
                                              const std::vector<GroundStationSite>& stations) {
    const double spin = 2.0 * std::numbers::pi * t.t_h / tem.earth_rotation_period_h;
    const Rotation3 frame = rotation_about_axis(kXAxis, deg_to_rad(geo.earth_obliquity_deg)) *
                            rotation_about_axis(kZAxis, spin);

    std::vector<Vector3> out;
    out.reserve(stations.size());
    for (const auto& site : stations) {
        require(site.lat_deg >= -90.0 && site.lat_deg <= 90.0,
                "station latitude out of [-90, 90]");
        require(site.lon_deg >= -180.0 && site.lon_deg <= 180.0,
                "station longitude out of [-180, 180]");
        const double lat = deg_to_rad(site.lat_deg);
        const double lon = deg_to_rad(site.lon_deg);
        const Vector3 ecef{geo.earth_radius_km * std::cos(lat) * std::cos(lon),
                           geo.earth_radius_km * std::cos(lat) * std::sin(lon),
                           geo.earth_radius_km * std::sin(lat)};
        out.push_back(frame.apply(ecef));
    }
    return out;
}

}  // namespace halobeam
