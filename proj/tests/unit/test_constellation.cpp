#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "halobeam/constellation.hpp"

using namespace halobeam;

namespace {

const GeometricParameters kGeo{};
const TemporalParameters kTem{};

Vector3 ellipse_y_axis(const SystemState& state) {
    const Vector3 x_hat = (state.moon_center - state.earth_center).normalized();
    return state.lunar_orbit_normal.cross(x_hat).normalized();
}

}  // namespace

TEST_CASE("stable constellation sits exactly at EMLP-2") {
    const ConstellationSpec spec = ConstellationSpec::stable();
    for (double t : {0.0, 48.0, 191.0}) {
        const SystemState state = system_state({t}, kGeo, kTem);
        const auto sats = satellite_positions({t}, spec, state);
        REQUIRE(sats.size() == 1);
        CHECK((sats[0] - state.emlp2).norm() == 0.0);
    }
}

TEST_CASE("halo parameterization hits the ellipse extremes") {
    const ConstellationSpec spec = ConstellationSpec::halo_orbit(15000.0, 1);
    {
        const SystemState state = system_state({0.0}, kGeo, kTem);
        const auto sats = satellite_positions({0.0}, spec, state);
        const Vector3 offset = sats[0] - state.emlp2;
        CHECK((offset - 15000.0 * state.lunar_orbit_normal).norm() < 1e-6);
    }
    {
        // theta = pi/2 at a quarter period: offset a_y = 0.343 * 15000 = 5145 km
        const double t = spec.halo.period_h / 4.0;
        const SystemState state = system_state({t}, kGeo, kTem);
        const auto sats = satellite_positions({t}, spec, state);
        const Vector3 offset = sats[0] - state.emlp2;
        CHECK((offset - 5145.0 * ellipse_y_axis(state)).norm() < 1e-6);
    }
}

TEST_CASE("three equidistant satellites sit at phases 0, 2pi/3, 4pi/3") {
    const ConstellationSpec spec = ConstellationSpec::halo_orbit(15000.0, 3);
    const SystemState state = system_state({0.0}, kGeo, kTem);
    const auto sats = satellite_positions({0.0}, spec, state);
    REQUIRE(sats.size() == 3);
    const Vector3 y_hat = ellipse_y_axis(state);
    const Vector3 z_hat = state.lunar_orbit_normal;
    for (int k = 0; k < 3; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / 3.0;
        const Vector3 expected = state.emlp2 + 5145.0 * std::sin(theta) * y_hat +
                                 15000.0 * std::cos(theta) * z_hat;
        CHECK((sats[static_cast<std::size_t>(k)] - expected).norm() < 1e-6);
    }
}

TEST_CASE("halo positions stay on the ellipse in the co-rotating plane") {
    const ConstellationSpec spec = ConstellationSpec::halo_orbit(15000.0, 3);
    for (double t : {0.0, 13.5, 48.0, 77.25, 150.0, 191.0}) {
        const SystemState state = system_state({t}, kGeo, kTem);
        const Vector3 x_hat = (state.moon_center - state.earth_center).normalized();
        const Vector3 y_hat = ellipse_y_axis(state);
        for (const auto& sat : satellite_positions({t}, spec, state)) {
            const Vector3 offset = sat - state.emlp2;
            CHECK(std::abs(offset.dot(x_hat)) < 1e-6);
            const double u = offset.dot(y_hat) / spec.halo.a_y_km;
            const double v = offset.dot(state.lunar_orbit_normal) / spec.halo.a_z_km;
            CHECK(u * u + v * v == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("halo positions are periodic and phase-symmetric") {
    const ConstellationSpec spec = ConstellationSpec::halo_orbit(15000.0, 3);
    for (double t : {5.0, 60.5, 140.0}) {
        const SystemState state = system_state({t}, kGeo, kTem);
        const auto now = satellite_positions({t}, spec, state);

        // One full halo period later the Moon has moved, so compare offsets
        // relative to EMLP-2 in the co-rotating ellipse basis.
        const double tp = t + spec.halo.period_h;
        const SystemState state_p = system_state({tp}, kGeo, kTem);
        const auto later = satellite_positions({tp}, spec, state_p);
        const Vector3 y0 = ellipse_y_axis(state);
        const Vector3 y1 = ellipse_y_axis(state_p);
        for (std::size_t k = 0; k < now.size(); ++k) {
            const Vector3 a = now[k] - state.emlp2;
            const Vector3 b = later[k] - state_p.emlp2;
            CHECK(std::abs(a.dot(y0) - b.dot(y1)) < 1e-6);
            CHECK(std::abs(a.dot(state.lunar_orbit_normal) -
                           b.dot(state_p.lunar_orbit_normal)) < 1e-6);
        }

        // Advancing by period/N maps the configuration onto itself.
        const double ts = t + spec.halo.period_h / 3.0;
        const SystemState state_s = system_state({ts}, kGeo, kTem);
        const auto shifted = satellite_positions({ts}, spec, state_s);
        const Vector3 ys = ellipse_y_axis(state_s);
        for (const auto& sat : now) {
            const Vector3 a = sat - state.emlp2;
            double best = 1e30;
            for (const auto& other : shifted) {
                const Vector3 b = other - state_s.emlp2;
                const double dy = a.dot(y0) - b.dot(ys);
                const double dz = a.dot(state.lunar_orbit_normal) -
                                  b.dot(state_s.lunar_orbit_normal);
                best = std::min(best, std::hypot(dy, dz));
            }
            CHECK(best < 1e-6);
        }
    }
}

TEST_CASE("spec validation") {
    ConstellationSpec spec = ConstellationSpec::halo_orbit(15000.0, 3);
    spec.halo.phase_offsets_rad.pop_back();
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    ConstellationSpec dup = ConstellationSpec::halo_orbit(15000.0, 2);
    dup.halo.phase_offsets_rad = {0.0, 2.0 * std::numbers::pi};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

    ConstellationSpec stable = ConstellationSpec::stable();
    stable.num_satellites = 2;
    CHECK_THROWS_AS(stable.validate(), std::invalid_argument);
}

TEST_CASE("visibility constraint margins") {
    {
        const auto check = validate_visibility_constraint(HaloOrbitSpec::with_default_ratio(15000.0, 1));
        CHECK(check.satisfied);
        CHECK(check.margin_km == doctest::Approx(1474.0).epsilon(1e-12));
    }
    {
        const auto check = validate_visibility_constraint(HaloOrbitSpec::with_default_ratio(5000.0, 1));
        CHECK_FALSE(check.satisfied);
        CHECK(check.margin_km == doctest::Approx(-1956.0).epsilon(1e-12));
    }
    {
        HaloOrbitSpec spec = HaloOrbitSpec::with_default_ratio(15000.0, 1);
        spec.a_y_km = 3671.0;
        const auto check = validate_visibility_constraint(spec);
        CHECK(check.satisfied);
        CHECK(check.margin_km == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
}
