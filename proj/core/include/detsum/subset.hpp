#pragma once

#include <cstdint>
#include <vector>

#include "detsum/errors.hpp"

namespace detsum {

/// Subset of {1, ..., n} as a bitmask; bit k-1 holds element k.
/// elements() always yields increasing order, which every row-order and
/// sign convention in the library relies on.
struct SubsetMask {
    int n = 0;
    std::uint64_t bits = 0;

    SubsetMask() = default;
    SubsetMask(int universe, std::uint64_t mask) : n(universe), bits(mask) {
        if (universe < 0 || universe > 62)
            throw ParameterRangeError("SubsetMask universe must be in [0, 62]");
        if (universe < 62 && mask >> universe)
            throw IndexOutOfRange("SubsetMask bits outside universe");
    }

    static SubsetMask empty(int n) { return SubsetMask(n, 0); }
    static SubsetMask full(int n) {
        return SubsetMask(n, n == 0 ? 0 : (~0ULL >> (64 - n)));
    }
    static SubsetMask of(int n, std::initializer_list<int> elems) {
        std::uint64_t b = 0;
        for (int e : elems) {
            if (e < 1 || e > n) throw IndexOutOfRange("element outside {1..n}");
            b |= 1ULL << (e - 1);
        }
        return SubsetMask(n, b);
    }

    int size() const { return __builtin_popcountll(bits); }
    bool contains(int k) const {
        if (k < 1 || k > n) throw IndexOutOfRange("element outside {1..n}");
        return bits >> (k - 1) & 1;
    }
    SubsetMask complement() const { return SubsetMask(n, full(n).bits & ~bits); }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits; b; b &= b - 1)
            out.push_back(__builtin_ctzll(b) + 1);
        return out;
    }

    bool operator==(const SubsetMask& o) const { return n == o.n && bits == o.bits; }
};

/// nu(I) = sum of the (1-based) elements of I.
inline long nu(const SubsetMask& I) {
    long s = 0;
    for (std::uint64_t b = I.bits; b; b &= b - 1) s += __builtin_ctzll(b) + 1;
    return s;
}

/// Calls fn(SubsetMask) for every subset of {1..n}, masks ascending.
template <class F>
void for_each_subset(int n, F&& fn) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
        fn(SubsetMask(n, mask));
}

/// Calls fn for every size-k subset of {1..n}, masks ascending.
template <class F>
void for_each_subset_of_size(int n, int k, F&& fn) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
        if (__builtin_popcountll(mask) == k) fn(SubsetMask(n, mask));
}

} // namespace detsum
