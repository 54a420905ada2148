#pragma once

#include <vector>

#include "halobeam/ephemeris.hpp"
#include "halobeam/geometry.hpp"

namespace halobeam {

/// Semi-minor to semi-major axis ratio that minimizes station-keeping cost.
inline constexpr double kHaloAxisRatio = 0.343;

/// Minimum semi-minor axis (km) clearing the lunar occultation of the Earth link.
inline constexpr double kMinSemiMinorAxisKm = 3671.0;

/// Halo orbit modeled as a geometric ellipse in the plane perpendicular to the
/// Earth-Moon line: semi-major axis a_z along the lunar-orbit normal, semi-minor
/// axis a_y in-plane lateral.
struct HaloOrbitSpec {
    double a_z_km = 15000.0;
    double a_y_km = kHaloAxisRatio * 15000.0;
    double period_h = 192.0;
    std::vector<double> phase_offsets_rad = {0.0};

    /// Spec with a_y = 0.343 a_z and n equally phased satellites (2 pi k / n).
    static HaloOrbitSpec with_default_ratio(double a_z_km, int num_satellites);

    void validate() const;
};

enum class ConstellationKind {
    stable_emlp2,  // single satellite fixed at the EMLP-2 point
    halo,          // satellites revolving on the EMLP-2 halo ellipse
};

struct ConstellationSpec {
    ConstellationKind kind = ConstellationKind::stable_emlp2;
    HaloOrbitSpec halo;
    int num_satellites = 1;

    static ConstellationSpec stable();
    static ConstellationSpec halo_orbit(double a_z_km, int num_satellites);

    void validate() const;
};

/// Inertial satellite positions at instant `t` for a state from the same `t`.
///
/// Halo satellites sit at emlp2 + a_y sin(theta_k) y + a_z cos(theta_k) z with
/// theta_k = 2 pi t / period + phase_offsets[k], z the lunar-orbit normal and
/// y = z x (Earth->Moon unit); the ellipse plane is perpendicular to the
/// Earth-Moon line and co-rotates with it.
std::vector<Vector3> satellite_positions(SimulationInstant t, const ConstellationSpec& spec,
                                         const SystemState& state);

struct VisibilityConstraintCheck {
    bool satisfied = false;
    double margin_km = 0.0;  // a_y - 3671; negative when violated
};

/// Checks the continuous-Earth-visibility clearance a_y >= 3671 km.
VisibilityConstraintCheck validate_visibility_constraint(const HaloOrbitSpec& spec);

}  // namespace halobeam
