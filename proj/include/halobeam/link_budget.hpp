#pragma once

namespace halobeam {

/// Optical link parameters. Lengths in meters throughout this module; the
/// km -> m conversion happens where a line-of-sight distance crosses the
/// coverage/link boundary.
struct LinkParameters {
    double p_t_w = 1000.0;      // electrical transmit power
    double lambda_m = 1.064e-6;  // laser wavelength
    double eta_t = 0.51;         // transmitter power conversion efficiency
    double eta_h = 0.508;        // receiver energy-harvesting conversion efficiency
    double d_r_m = 1.0;          // receiver aperture diameter
    double l_e = 1.0;            // path loss factors, unity for the space link
    double l_s = 1.0;
    double l_c = 1.0;

    void validate() const;
};

/// Geometry-derived link quantities under adaptive beam divergence: the
/// divergence phi = d_R / R pins the far-field spot to the receiver aperture,
/// which fixes the transmitter aperture d_T = lambda / phi and both gains.
struct LinkGeometry {
    double range_m = 0.0;
    double phi_rad = 0.0;
    double d_t_m = 0.0;
    double g_t = 0.0;
    double g_r = 0.0;
};

/// Throws std::invalid_argument unless range_m > 0.
LinkGeometry link_geometry(const LinkParameters& params, double range_m);

/// Transmitter misalignment loss exp(-G_T gamma^2), in (0, 1].
double misalignment_loss(double g_t, double gamma_rad);

struct LinkBudgetResult {
    double l_t = 1.0;    // misalignment loss factor
    double c2_w = 0.0;   // harvested power at zero misalignment
    double p_h_w = 0.0;  // harvested power, = c2 * l_t
};

/// Deterministic harvested power for a radial misalignment `gamma_rad`.
/// Under adaptive divergence the zero-misalignment power reduces to
/// P_T eta_T eta_H (pi/4)^2 independent of range; the full factor-by-factor
/// product is evaluated here so that reduction stays checkable.
LinkBudgetResult harvested_power(const LinkParameters& params, const LinkGeometry& geom,
                                 double gamma_rad);

}  // namespace halobeam
