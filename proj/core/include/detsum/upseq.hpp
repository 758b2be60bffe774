#pragma once

/**
 * @file upseq.hpp
 * @brief Nondecreasing bounded integer sequences and the bead-diagram
 *        transpose map.
 *
 * An UpSeq (n_1 <= ... <= n_k, entries <= bound) is drawn as a
 * k x bound grid of beads: column i carries n_i beads in its top n_i
 * cells. Reading the grid by rows (bottom row first) gives another
 * nondecreasing sequence phi(n) of length bound with entries <= k;
 * transposing the grid realizes phi as an involution.
 */

#include <compare>
#include <string>
#include <vector>

#include "detsum/errors.hpp"
#include "detsum/matrix.hpp"   // ExponentSeq

namespace detsum {

struct UpSeq {
    std::vector<int> entries;
    int bound = 0;

    UpSeq() = default;
    UpSeq(std::vector<int> e, int bound_);

    int size() const { return static_cast<int>(entries.size()); }
    long weight() const;

    bool operator==(const UpSeq& o) const { return entries == o.entries; }
    bool operator!=(const UpSeq& o) const { return !(*this == o); }

    std::string str() const;   // "(0,2,4)"
};

/// Ordering compared from the last entry downward: x < y iff at the
/// largest index where they differ, x's entry is smaller.
std::strong_ordering lex_compare(const UpSeq& x, const UpSeq& y);

/// Strict-weak-order adapter for containers.
struct UpSeqLexLess {
    bool operator()(const UpSeq& x, const UpSeq& y) const {
        return lex_compare(x, y) == std::strong_ordering::less;
    }
};

/// Row counts of the bead diagram: phi(n)_j = #{i : n_i > bound - j}.
/// Result has length n.bound and bound n.size(); conserves total weight,
/// and phi(phi(n)) == n.
UpSeq phi(const UpSeq& n);

/// tilde(m)_r = m_r + r - 1: strictly increasing exponent sequence.
ExponentSeq tilde(const UpSeq& m);

/// psi(m) = tilde(phi(m)).
ExponentSeq psi(const UpSeq& m);

/// All UpSeqs with k entries bounded by `bound` and total weight p,
/// sorted ascending in the lex order above.
std::vector<UpSeq> upseqs_of_weight(int k, int bound, long p);

/// Bead diagram of an UpSeq; ascii() draws rows top-down with '*' beads,
/// column counts underneath and row counts phi(n)_j on the right.
struct BeadDiagram {
    UpSeq columns;

    explicit BeadDiagram(UpSeq cols) : columns(std::move(cols)) {}

    UpSeq row_counts() const { return phi(columns); }
    long total_beads() const { return columns.weight(); }
    std::string ascii() const;
};

} // namespace detsum
