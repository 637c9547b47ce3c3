#pragma once

#include <cmath>
#include <cstdint>

namespace ortho {

// SplitMix64 (Steele, Lea, Flood 2014). Used everywhere randomness is
// needed so that seeded runs reproduce bit-for-bit across platforms;
// the standard library distributions are implementation-defined.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1].
    double next_double_open() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // Standard normal via Box-Muller; the spare value is cached.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = next_double_open();
        double v = next_double();
        double r = std::sqrt(-2.0 * std::log(u));
        double theta = 2.0 * M_PI * v;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Stream derivation for parallel/batched use: feeds both words through one
// extra SplitMix64 round each.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
    g.next();
    return g.next();
}

} // namespace ortho
