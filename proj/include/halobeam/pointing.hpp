#pragma once

#include <cstdint>
#include <vector>

#include "halobeam/link_budget.hpp"

namespace halobeam {

/// Residual pointing jitter after the ATP stage: equal per-axis Gaussian
/// deviations sigma_a = sigma_e = sigma_gamma, making the radial error
/// Rayleigh(sigma_gamma).
struct PointingErrorModel {
    double sigma_gamma_rad = 5e-9;

    void validate() const;
};

/// Distribution of the harvested power H = c2 * exp(c1 * gamma^2) with gamma
/// Rayleigh(sigma): density f(h) = psi / (|c1| h) * (h / c2)^(psi/|c1|) on
/// (0, c2], with c1 = -G_T and psi = 1 / (2 sigma^2). The closed-form CDF is
/// F(h) = (h / c2)^(psi/|c1|), clamped to 1 above c2.
struct HarvestedPowerDistribution {
    double c1 = 0.0;    // -G_T, negative
    double c2_w = 0.0;  // harvested power at zero misalignment
    double psi = 0.0;   // 1 / (2 sigma^2)

    static HarvestedPowerDistribution make(const LinkParameters& params,
                                           const LinkGeometry& geom,
                                           const PointingErrorModel& model);

    /// The power-law exponent psi / |c1|.
    double exponent() const;

    /// Density at h in (0, c2]; throws std::domain_error outside the support.
    double pdf(double h_w) const;

    /// F(h); 0 for h <= 0 and 1 for h >= c2. Evaluated in log space so it
    /// stays accurate for h many orders of magnitude below c2.
    double cdf(double h_w) const;

    /// F at ln(h); the support in log power reaches far below what a double
    /// can hold as a plain power, so distribution comparisons use this form.
    double cdf_log_power(double log_h_w) const;

    /// Inverse CDF for p in [0, 1]; underflows to the smallest positive
    /// double when the true quantile is not representable.
    double quantile(double p) const;
};

/// n i.i.d. Rayleigh(sigma) radial pointing errors, generated as
/// sqrt(x1^2 + x2^2) from per-axis Gaussian draws. Deterministic in the seed
/// and independent of the worker count.
std::vector<double> sample_radial_error(const PointingErrorModel& model, std::uint64_t seed,
                                        std::size_t n, unsigned threads = 0);

/// Sorted empirical distribution of harvested-power samples. Samples are kept
/// as natural-log powers: for strong jitter the power law spreads over
/// hundreds of decades and the lowest draws are not representable as plain
/// doubles, while their logarithms always are.
class EmpiricalCdf {
  public:
    /// Builds from plain power samples (all must be positive).
    static EmpiricalCdf from_samples(const std::vector<double>& samples_w);

    /// Builds from natural-log power samples.
    static EmpiricalCdf from_log_powers(std::vector<double> log_samples);

    /// Fraction of samples <= h; nondecreasing in h with range [0, 1].
    double evaluate(double h_w) const;

    /// Power samples in watts, ascending, clamped to the smallest positive
    /// double where the true value underflows; every value lies in (0, c2]
    /// for link draws.
    std::vector<double> samples_w() const;

    const std::vector<double>& log_samples() const { return sorted_log_; }
    std::size_t size() const { return sorted_log_.size(); }

  private:
    std::vector<double> sorted_log_;
};

/// Empirical CDF of n Monte Carlo harvested-power draws
/// P_H = c2 * exp(-G_T gamma^2), carried in log space (see EmpiricalCdf).
EmpiricalCdf monte_carlo_cdf(const LinkParameters& params, const LinkGeometry& geom,
                             const PointingErrorModel& model, std::size_t n, std::uint64_t seed,
                             unsigned threads = 0);

/// Sup-norm distance between the empirical and analytic CDFs over the sample
/// points. Throws std::invalid_argument on an empty sample.
double ks_statistic(const EmpiricalCdf& emp, const HarvestedPowerDistribution& dist);

}  // namespace halobeam
