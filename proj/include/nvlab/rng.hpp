#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "nvlab/constants.hpp"

namespace nvlab {

namespace detail {
/// splitmix64 step, used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

/// Seeded random stream. The samplers are implemented here rather than with
/// std::*_distribution so that a given (seed, call sequence) yields the same
/// draws on every platform and standard library. A simulation instance owns
/// one stream; derive() gives decorrelated child streams.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    /// Uniform double in (0, 1].
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (one value per uniform pair, no state).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi() * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    /// Poisson draw. Sequential inversion below 30, PTRS transformed
    /// rejection (Hormann) above. Returns 0 for mean <= 0.
    std::uint64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean < 30.0) return poisson_inversion(mean);
        return poisson_ptrs(mean);
    }

    /// Child stream whose draws are independent of this one.
    RandomStream derive(std::uint64_t stream_id) const {
        std::uint64_t s = seed_ ^ (0xda3e39cb94b95bdbULL * (stream_id + 1));
        detail::splitmix64(s);
        return RandomStream(detail::splitmix64(s));
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t poisson_inversion(double mean) {
        const double l = std::exp(-mean);
        std::uint64_t k = 0;
        double p = uniform();
        while (p > l) {
            p *= uniform();
            ++k;
        }
        return k;
    }

    std::uint64_t poisson_ptrs(double mean) {
        const double slam = std::sqrt(mean);
        const double loglam = std::log(mean);
        const double b = 0.931 + 2.53 * slam;
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double vr = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            const double u = uniform() - 0.5;
            const double v = uniform();
            const double us = 0.5 - std::abs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
                -mean + kf * loglam - std::lgamma(kf + 1.0)) {
                return static_cast<std::uint64_t>(kf);
            }
        }
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace nvlab
