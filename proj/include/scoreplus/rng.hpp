#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace scoreplus {

/// SplitMix64 finalizer. Used to derive independent engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/**
 * Portable random stream: std::mt19937_64 (bit-exact across standard
 * libraries) with hand-rolled conversions, since the std distributions are
 * implementation-defined.
 *
 * Stream r of seed s is seeded with splitmix64(splitmix64(s) ^ splitmix64(r + 1)).
 * Consumers take distinct stream ids for independent work (k-means restart r
 * uses stream r; simulation replicates use their own seeds).
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream_id + 1)));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

    /// Pareto with shape alpha and scale (minimum) beta, by inversion.
    double pareto(double alpha, double beta) { return beta * std::pow(1.0 - uniform(), -1.0 / alpha); }

private:
    std::mt19937_64 engine_;
};

}  // namespace scoreplus
