#ifndef UGTOP_RNG_HPP
#define UGTOP_RNG_HPP

#include <cstdint>

namespace ugtop {

/// splitmix64. Used instead of <random> distributions so that seeded output
/// is identical across platforms and standard library implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in {0..bound-1}, bound >= 1, rejection sampled.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1).
    double unit() { return (next() >> 11) * 0x1.0p-53; }
};

} // namespace ugtop

#endif
