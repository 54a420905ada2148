#include "halobeam/pointing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "halobeam/parallel.hpp"
#include "halobeam/rng.hpp"

namespace halobeam {

namespace {

constexpr std::size_t kChunkSize = 1 << 16;

/// Runs fn(chunk_index, begin, count, chunk_rng) over fixed-size chunks of n
/// draws. Chunk boundaries and seeds depend only on (seed, n), never on the
/// thread count, so outputs are bit-reproducible.
template <typename Fn>
void chunked_draws(std::size_t n, std::uint64_t seed, unsigned threads, Fn&& fn) {
    const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
    parallel_for(chunks, threads, [&](std::size_t c) {
        const std::size_t begin = c * kChunkSize;
        const std::size_t count = std::min(kChunkSize, n - begin);
        RandomStream rng(stream_seed(seed, c));
        fn(begin, count, rng);
    });
}

double rayleigh_draw(RandomStream& rng, double sigma) {
    const auto [x1, x2] = rng.gaussian_pair(sigma);
    return std::sqrt(x1 * x1 + x2 * x2);
}

}  // namespace

void PointingErrorModel::validate() const {
    if (!(sigma_gamma_rad > 0.0)) {
        throw std::invalid_argument("pointing deviation sigma must be positive");
    }
}

HarvestedPowerDistribution HarvestedPowerDistribution::make(const LinkParameters& params,
                                                            const LinkGeometry& geom,
                                                            const PointingErrorModel& model) {
    model.validate();
    HarvestedPowerDistribution dist;
    dist.c1 = -geom.g_t;
    dist.c2_w = harvested_power(params, geom, 0.0).c2_w;
    dist.psi = 1.0 / (2.0 * model.sigma_gamma_rad * model.sigma_gamma_rad);
    return dist;
}

double HarvestedPowerDistribution::exponent() const { return psi / std::abs(c1); }

double HarvestedPowerDistribution::pdf(double h_w) const {
    if (!(h_w > 0.0) || h_w > c2_w) {
        throw std::domain_error("harvested power outside the support (0, c2]");
    }
    const double log_ratio = std::log(h_w) - std::log(c2_w);
    return psi / (std::abs(c1) * h_w) * std::exp(-psi * (log_ratio / c1));
}

double HarvestedPowerDistribution::cdf(double h_w) const {
    if (h_w <= 0.0) return 0.0;
    return cdf_log_power(std::log(h_w));
}

double HarvestedPowerDistribution::cdf_log_power(double log_h_w) const {
    const double log_c2 = std::log(c2_w);
    if (log_h_w >= log_c2) return 1.0;
    return std::exp(exponent() * (log_h_w - log_c2));
}

double HarvestedPowerDistribution::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability must lie in [0, 1]");
    }
    if (p == 0.0) return 0.0;
    const double h = c2_w * std::exp(std::log(p) / exponent());
    return h > 0.0 ? h : std::numeric_limits<double>::denorm_min();
}

std::vector<double> sample_radial_error(const PointingErrorModel& model, std::uint64_t seed,
                                        std::size_t n, unsigned threads) {
    model.validate();
    if (n == 0) {
        throw std::invalid_argument("sample count must be at least one");
    }
    std::vector<double> out(n);
    chunked_draws(n, seed, threads, [&](std::size_t begin, std::size_t count, RandomStream& rng) {
        for (std::size_t i = 0; i < count; ++i) {
            out[begin + i] = rayleigh_draw(rng, model.sigma_gamma_rad);
        }
    });
    return out;
}

EmpiricalCdf EmpiricalCdf::from_samples(const std::vector<double>& samples_w) {
    std::vector<double> logs;
    logs.reserve(samples_w.size());
    for (double h : samples_w) {
        if (!(h > 0.0)) {
            throw std::invalid_argument("power samples must be positive");
        }
        logs.push_back(std::log(h));
    }
    return from_log_powers(std::move(logs));
}

EmpiricalCdf EmpiricalCdf::from_log_powers(std::vector<double> log_samples) {
    std::sort(log_samples.begin(), log_samples.end());
    EmpiricalCdf cdf;
    cdf.sorted_log_ = std::move(log_samples);
    return cdf;
}

double EmpiricalCdf::evaluate(double h_w) const {
    if (sorted_log_.empty()) {
        throw std::invalid_argument("empirical CDF has no samples");
    }
    if (h_w <= 0.0) return 0.0;
    const auto it = std::upper_bound(sorted_log_.begin(), sorted_log_.end(), std::log(h_w));
    return static_cast<double>(it - sorted_log_.begin()) /
           static_cast<double>(sorted_log_.size());
}

std::vector<double> EmpiricalCdf::samples_w() const {
    std::vector<double> out;
    out.reserve(sorted_log_.size());
    for (double u : sorted_log_) {
        const double h = std::exp(u);
        out.push_back(h > 0.0 ? h : std::numeric_limits<double>::denorm_min());
    }
    return out;
}

EmpiricalCdf monte_carlo_cdf(const LinkParameters& params, const LinkGeometry& geom,
                             const PointingErrorModel& model, std::size_t n, std::uint64_t seed,
                             unsigned threads) {
    model.validate();
    if (n == 0) {
        throw std::invalid_argument("sample count must be at least one");
    }
    const double log_c2 = std::log(harvested_power(params, geom, 0.0).c2_w);
    std::vector<double> log_samples(n);
    chunked_draws(n, seed, threads, [&](std::size_t begin, std::size_t count, RandomStream& rng) {
        for (std::size_t i = 0; i < count; ++i) {
            const double gamma = rayleigh_draw(rng, model.sigma_gamma_rad);
            // ln P_H = ln c2 - G_T gamma^2, exact where the plain power underflows
            log_samples[begin + i] = log_c2 - geom.g_t * gamma * gamma;
        }
    });
    return EmpiricalCdf::from_log_powers(std::move(log_samples));
}

double ks_statistic(const EmpiricalCdf& emp, const HarvestedPowerDistribution& dist) {
    const auto& logs = emp.log_samples();
    if (logs.empty()) {
        throw std::invalid_argument("empirical CDF has no samples");
    }
    const double n = static_cast<double>(logs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        const double f = dist.cdf_log_power(logs[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, std::abs(f - lo), std::abs(f - hi)});
    }
    return d;
}

}  // namespace halobeam
