#pragma once

#include <cstdint>
#include <cmath>
#include <vector>

namespace argen {

// Deterministic seeded RNG stream. Wraps a fixed 64-bit generator so results
// are reproducible across platforms; per-item streams are derived by mixing
// the master seed with counters (see derive()).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n)
    std::uint64_t uniform_index(std::uint64_t n) {
        // rejection sampling to avoid modulo bias
        std::uint64_t threshold = (~n + 1) % n;  // (2^64 - n) mod n
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller (cached second value).
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double mag = std::sqrt(-2.0 * std::log(u1));
        cached_ = mag * std::sin(2.0 * M_PI * u2);
        has_cached_ = true;
        return mag * std::cos(2.0 * M_PI * u2);
    }

    std::vector<double> normal_vec(std::size_t n) {
        std::vector<double> v(n);
        for (auto& x : v) x = normal();
        return v;
    }

    // Derive an independent child stream from (seed, a, b, c). Used to give
    // each clip / item its own stream so parallel schedules cannot change
    // results.
    static RngStream derive(std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b = 0, std::uint64_t c = 0) {
        std::uint64_t s = mix(mix(mix(seed, a ^ 0xA24BAED4963EE407ULL), b ^ 0x9FB21C651E98DF25ULL),
                              c ^ 0xD6E8FEB86659FD93ULL);
        return RngStream(s);
    }

private:
    static std::uint64_t mix(std::uint64_t h, std::uint64_t k) {
        h ^= k + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0xFF51AFD7ED558CCDULL;
        h ^= h >> 33;
        return h;
    }

    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace argen
