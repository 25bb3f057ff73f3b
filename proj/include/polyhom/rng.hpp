#pragma once

#include <cstdint>

namespace polyhom {

/// SplitMix64: the suite PRNG. The exact update is part of the report format
/// so that ports can reproduce instances:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] (inclusive).
    long long range(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    bool chance(unsigned percent) { return next() % 100 < percent; }

    /// Derives an independent deterministic substream.
    SplitMix64 fork() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

}  // namespace polyhom
