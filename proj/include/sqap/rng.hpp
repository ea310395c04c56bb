#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>

namespace sqap {

/// Deterministic 64-bit generator (SplitMix64, Steele et al. 2014).
///
/// The state advances by a fixed odd constant and the output is a bijective
/// mix of the state, so the raw `next_u64` stream is identical on every
/// platform for a given seed. Floating-point derivations (`uniform`,
/// `normal`) use only IEEE-exact scaling plus libm log/cos.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Standard normal via Box-Muller (cosine branch only; no cached spare,
    /// so the draw count per call is fixed).
    double normal() {
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Integer in [0, n) via the multiply-shift reduction (n > 0).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

/// Seed for an independent sub-stream of `master`. Trials in a sweep use
/// stream = trial index so results do not depend on execution order.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
    Rng mix(master ^ (0xA0761D6478BD642FULL + stream * 0xE7037ED1A0B428DBULL));
    return mix.next_u64();
}

} // namespace sqap
