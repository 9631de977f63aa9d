#pragma once

#include <cstdint>

namespace ehc {

// SplitMix64. Fixed here so seeded runs are bit-identical across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    bool next_bit() { return (next() & 1ULL) != 0; }

    // Uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

// Per-task seed for partitioned sampling: task i gets an independent stream,
// so results do not depend on how tasks are assigned to workers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task) {
    SplitMix64 g(seed + (task + 1) * 0x9E3779B97F4A7C15ULL);
    return g.next();
}

} // namespace ehc
