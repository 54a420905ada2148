#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "halobeam/ephemeris.hpp"

using namespace halobeam;

namespace {
const GeometricParameters kGeo{};
const TemporalParameters kTem{};
}  // namespace

TEST_CASE("epoch puts the Moon at the ascending node") {
    const SystemState s = system_state({0.0}, kGeo, kTem);
    CHECK(s.moon_center.x == doctest::Approx(385000.0).epsilon(1e-12));
    CHECK(std::abs(s.moon_center.y) < 1e-9);
    CHECK(std::abs(s.moon_center.z) < 1e-9);
    CHECK(s.emlp2.x == doctest::Approx(449500.0).epsilon(1e-12));
    CHECK(std::abs(s.emlp2.y) < 1e-9);
    CHECK(std::abs(s.emlp2.z) < 1e-9);
}

TEST_CASE("half a lunar period reaches the antipode") {
    const SystemState s = system_state({324.0}, kGeo, kTem);
    CHECK(s.moon_center.x == doctest::Approx(-385000.0).epsilon(1e-12));
    CHECK(std::abs(s.moon_center.y) < 1e-6);
    CHECK(std::abs(s.moon_center.z) < 1e-6);
}

TEST_CASE("tidal lock holds at every instant") {
    for (double t : {0.0, 17.25, 100.5, 323.0, 500.75, 647.0}) {
        const SystemState s = system_state({t}, kGeo, kTem);
        const Vector3 sub_earth = s.moon_body_frame.apply({1, 0, 0});
        const Vector3 moon_to_earth = (s.earth_center - s.moon_center).normalized();
        CHECK((sub_earth - moon_to_earth).norm() < 1e-12);
    }
}

TEST_CASE("moon orbit is circular, periodic, and collinear with EMLP-2") {
    for (double t : {3.0, 57.5, 111.0, 200.25, 480.0}) {
        const SystemState s = system_state({t}, kGeo, kTem);
        CHECK(s.moon_center.norm() == doctest::Approx(385000.0).epsilon(1e-12));

        const SystemState later = system_state({t + 648.0}, kGeo, kTem);
        CHECK((later.moon_center - s.moon_center).norm() < 1e-6);

        const Vector3 radial = (s.moon_center - s.earth_center).normalized();
        const Vector3 beyond = (s.emlp2 - s.moon_center).normalized();
        CHECK(beyond.cross(radial).norm() < 1e-12);
        CHECK((s.emlp2 - s.moon_center).norm() ==
              doctest::Approx(64500.0).epsilon(1e-12));
        CHECK(beyond.dot(radial) > 0.0);  // beyond the Moon, not between
    }
}

TEST_CASE("moon body frame stays orthonormal with the configured spin tilt") {
    const SystemState s = system_state({123.0}, kGeo, kTem);
    CHECK(s.moon_body_frame.orthonormality_error() < 1e-12);
    const Vector3 spin_axis = s.moon_body_frame.apply({0, 0, 1});
    const double tilt = angle_between(spin_axis, s.lunar_orbit_normal);
    CHECK(tilt == doctest::Approx(deg_to_rad(1.54)).epsilon(1e-9));
}

TEST_CASE("ground stations ride the rotating Earth") {
    const std::vector<GroundStationSite> prime = {{0.0, 0.0}};
    const auto p0 = ground_station_positions({0.0}, kGeo, kTem, prime);
    CHECK(p0[0].x == doctest::Approx(6371.0).epsilon(1e-12));
    CHECK(std::abs(p0[0].y) < 1e-9);
    CHECK(std::abs(p0[0].z) < 1e-9);

    // Twelve hours later the station sits 180 degrees around the spin axis.
    const auto p12 = ground_station_positions({12.0}, kGeo, kTem, prime);
    CHECK(p12[0].x == doctest::Approx(-6371.0).epsilon(1e-9));
    CHECK(std::abs(p12[0].y) < 1e-6);
    CHECK(std::abs(p12[0].z) < 1e-6);

    const std::vector<GroundStationSite> pole = {{90.0, 33.0}};
    const auto n0 = ground_station_positions({0.0}, kGeo, kTem, pole);
    const auto n7 = ground_station_positions({7.3}, kGeo, kTem, pole);
    CHECK((n0[0] - n7[0]).norm() < 1e-9);
    CHECK(n0[0].norm() == doctest::Approx(6371.0).epsilon(1e-12));
}

TEST_CASE("station coordinates are range checked") {
    CHECK_THROWS_AS(ground_station_positions({0.0}, kGeo, kTem, {{91.0, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ground_station_positions({0.0}, kGeo, kTem, {{0.0, -181.0}}),
                    std::invalid_argument);
}

TEST_CASE("parameter validation") {
    GeometricParameters bad_geo;
    bad_geo.moon_radius_km = -1.0;
    CHECK_THROWS_AS(bad_geo.validate(), std::invalid_argument);

    TemporalParameters bad_tem;
    bad_tem.sample_step_h = 0.0;
    CHECK_THROWS_AS(bad_tem.validate(), std::invalid_argument);

    TemporalParameters long_step;
    long_step.sample_step_h = 1000.0;
    CHECK_THROWS_AS(long_step.validate(), std::invalid_argument);

    CHECK_THROWS_AS(system_state({-1.0}, kGeo, kTem), std::invalid_argument);
}
