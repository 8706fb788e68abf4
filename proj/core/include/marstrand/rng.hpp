#pragma once

#include <cstdint>

namespace marstrand {

// Counter-based randomness: every draw is a pure function of
// (seed, stream, counter), so parallel consumers never share state and
// results do not depend on thread count or evaluation order.

/// SplitMix64 finalizer; full-period bijective mixer on 64 bits.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct CounterRng {
    std::uint64_t seed = 0;

    std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
        return mix64(mix64(mix64(seed) ^ stream) ^ counter);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform(std::uint64_t stream, std::uint64_t counter) const {
        return static_cast<double>(bits(stream, counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(std::uint64_t stream, std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(stream, counter);
    }

    /// Uniform index in [0, n).
    std::uint64_t index(std::uint64_t stream, std::uint64_t counter, std::uint64_t n) const {
        return static_cast<std::uint64_t>(uniform(stream, counter) * static_cast<double>(n));
    }
};

// Stream tags; keeps independent sampling purposes on disjoint streams.
namespace streams {
inline constexpr std::uint64_t lambda = 0x11;
inline constexpr std::uint64_t pairs = 0x22;
inline constexpr std::uint64_t points = 0x33;
inline constexpr std::uint64_t offsets = 0x44;
}  // namespace streams

}  // namespace marstrand
