#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

namespace halobeam {

/// SplitMix64 output function; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for sub-stream `stream` of a run keyed by `seed`. Distinct streams are
/// decorrelated, so chunks of work can be generated independently and merged
/// in any order.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream));
}

/// Deterministic uniform/Gaussian source over a standard engine. The engine
/// (mersenne_twister_engine) and its single-value seeding are fully specified
/// by the language standard, so streams are reproducible across platforms.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in (0, 1]; safe as a log argument.
    double uniform_open_closed() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform draw in [0, 1).
    double uniform_closed_open() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// One Box-Muller pair of independent zero-mean Gaussians with deviation sigma.
    std::pair<double, double> gaussian_pair(double sigma) {
        const double r = std::sqrt(-2.0 * std::log(uniform_open_closed()));
        const double phi = 2.0 * std::numbers::pi * uniform_closed_open();
        return {sigma * r * std::cos(phi), sigma * r * std::sin(phi)};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace halobeam
