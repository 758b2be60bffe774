#pragma once

#include <cstdint>
#include <string_view>

namespace detsum {

// splitmix64: tiny, portable, and identical output on every platform.
// std::uniform_int_distribution is implementation-defined, so seeded
// reproducibility anywhere in the artifact must go through this.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    bool coin() { return next() & 1ULL; }
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Per-cell seed derivation: parallel scheduling must never change which
// point a cell sees.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view cell_id) {
    SplitMix64 g(seed ^ fnv1a64(cell_id));
    return g.next();
}

} // namespace detsum
