#include "halobeam/constellation.hpp"

#include <cmath>
#include <stdexcept>

namespace halobeam {

HaloOrbitSpec HaloOrbitSpec::with_default_ratio(double a_z_km, int num_satellites) {
    HaloOrbitSpec spec;
    spec.a_z_km = a_z_km;
    spec.a_y_km = kHaloAxisRatio * a_z_km;
    spec.phase_offsets_rad.clear();
    for (int k = 0; k < num_satellites; ++k) {
        spec.phase_offsets_rad.push_back(2.0 * std::numbers::pi * k / num_satellites);
    }
    return spec;
}

void HaloOrbitSpec::validate() const {
    if (!(a_z_km > 0.0) || !(a_y_km > 0.0)) {
        throw std::invalid_argument("halo semi-axes must be positive");
    }
    if (!(period_h > 0.0)) {
        throw std::invalid_argument("halo period must be positive");
    }
    if (phase_offsets_rad.empty()) {
        throw std::invalid_argument("halo orbit needs at least one phase offset");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < phase_offsets_rad.size(); ++i) {
        for (std::size_t j = i + 1; j < phase_offsets_rad.size(); ++j) {
            double d = std::fmod(phase_offsets_rad[i] - phase_offsets_rad[j], two_pi);
            if (d < 0.0) d += two_pi;
            if (std::min(d, two_pi - d) < 1e-12) {
                throw std::invalid_argument("satellite phase offsets must be distinct modulo 2 pi");
            }
        }
    }
}

ConstellationSpec ConstellationSpec::stable() {
    ConstellationSpec spec;
    spec.kind = ConstellationKind::stable_emlp2;
    spec.num_satellites = 1;
    return spec;
}

ConstellationSpec ConstellationSpec::halo_orbit(double a_z_km, int num_satellites) {
    ConstellationSpec spec;
    spec.kind = ConstellationKind::halo;
    spec.num_satellites = num_satellites;
    spec.halo = HaloOrbitSpec::with_default_ratio(a_z_km, num_satellites);
    return spec;
}

void ConstellationSpec::validate() const {
    if (num_satellites < 1) {
        throw std::invalid_argument("constellation needs at least one satellite");
    }
    if (kind == ConstellationKind::stable_emlp2) {
        if (num_satellites != 1) {
            throw std::invalid_argument("the stable EMLP-2 configuration has exactly one satellite");
        }
        return;
    }
    halo.validate();
    if (halo.phase_offsets_rad.size() != static_cast<std::size_t>(num_satellites)) {
        throw std::invalid_argument("satellite count does not match the phase offset list");
    }
}

std::vector<Vector3> satellite_positions(SimulationInstant t, const ConstellationSpec& spec,
                                         const SystemState& state) {
    spec.validate();
    if (spec.kind == ConstellationKind::stable_emlp2) {
        return {state.emlp2};
    }

    const Vector3 earth_to_moon = (state.moon_center - state.earth_center).normalized();
    const Vector3 z_hat = state.lunar_orbit_normal;
    const Vector3 y_hat = z_hat.cross(earth_to_moon).normalized();

    std::vector<Vector3> positions;
    positions.reserve(spec.halo.phase_offsets_rad.size());
    for (double offset : spec.halo.phase_offsets_rad) {
        const double theta = 2.0 * std::numbers::pi * t.t_h / spec.halo.period_h + offset;
        positions.push_back(state.emlp2 + spec.halo.a_y_km * std::sin(theta) * y_hat +
                            spec.halo.a_z_km * std::cos(theta) * z_hat);
    }
    return positions;
}

VisibilityConstraintCheck validate_visibility_constraint(const HaloOrbitSpec& spec) {
    spec.validate();
    VisibilityConstraintCheck check;
    check.margin_km = spec.a_y_km - kMinSemiMinorAxisKm;
    check.satisfied = spec.a_y_km >= kMinSemiMinorAxisKm;
    return check;
}

}  // namespace halobeam
