#include "halobeam/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace halobeam {

void LinkParameters::validate() const {
    if (!(p_t_w > 0.0)) throw std::invalid_argument("transmit power must be positive");
    if (!(lambda_m > 0.0)) throw std::invalid_argument("wavelength must be positive");
    if (!(eta_t > 0.0 && eta_t <= 1.0)) throw std::invalid_argument("eta_t must lie in (0, 1]");
    if (!(eta_h > 0.0 && eta_h <= 1.0)) throw std::invalid_argument("eta_h must lie in (0, 1]");
    if (!(d_r_m > 0.0)) throw std::invalid_argument("receiver aperture must be positive");
    for (double l : {l_e, l_s, l_c}) {
        if (!(l > 0.0 && l <= 1.0)) throw std::invalid_argument("loss factors must lie in (0, 1]");
    }
}

LinkGeometry link_geometry(const LinkParameters& params, double range_m) {
    params.validate();
    if (!(range_m > 0.0)) {
        throw std::invalid_argument("line-of-sight range must be positive");
    }
    LinkGeometry geom;
    geom.range_m = range_m;
    geom.phi_rad = params.d_r_m / range_m;
    geom.d_t_m = params.lambda_m / geom.phi_rad;
    const double pi = std::numbers::pi;
    geom.g_t = std::pow(pi * geom.d_t_m / params.lambda_m, 2.0);
    geom.g_r = std::pow(pi * params.d_r_m / params.lambda_m, 2.0);
    return geom;
}

double misalignment_loss(double g_t, double gamma_rad) {
    if (!(g_t > 0.0)) throw std::invalid_argument("transmitter gain must be positive");
    if (gamma_rad < 0.0) throw std::invalid_argument("radial misalignment must be non-negative");
    return std::exp(-g_t * gamma_rad * gamma_rad);
}

LinkBudgetResult harvested_power(const LinkParameters& params, const LinkGeometry& geom,
                                 double gamma_rad) {
    params.validate();
    const double pi = std::numbers::pi;
    const double spreading = std::pow(params.lambda_m / (4.0 * pi * geom.range_m), 2.0);
    LinkBudgetResult result;
    result.c2_w = params.p_t_w * spreading * params.eta_t * params.eta_h * geom.g_t * geom.g_r *
                  params.l_e * params.l_s * params.l_c;
    result.l_t = misalignment_loss(geom.g_t, gamma_rad);
    result.p_h_w = result.c2_w * result.l_t;
    return result;
}

}  // namespace halobeam
