#ifndef GAIDS_RANDOM_HPP
#define GAIDS_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace gaids {

/*
 * Seedable generator with platform-independent draws. The engine is
 * std::mt19937_64, whose output sequence is fixed by the standard; the
 * distributions are implemented here because the standard library ones
 * are implementation-defined.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream for one record of a batch, independent of scheduling.
    static Rng for_record(std::uint64_t seed, std::uint64_t record_index) { return Rng(seed ^ record_index); }

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [lo, hi], unbiased (rejection sampling).
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo;
        if (span == UINT64_MAX) return next();
        const std::uint64_t n = span + 1;
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return lo + r % n;
    }

    /// Standard normal via Box-Muller; the second variate is cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace gaids

#endif
