#pragma once

/**
 * @file fixtures.hpp
 * @brief Hand-transcribed golden data for the worked k=3, n=7 examples and
 *        the bead-diagram example; the `examples` command and the
 *        acceptance suite diff generated output against these.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace detsum::fixtures {

struct SignedSeq {
    int sign;                  // +1 / -1
    std::vector<int> entries;  // nondecreasing, k = 3, bound = 4
};

/// The 35 signed terms of the pair-product expansion for |I| = 3 against
/// four complementary indices, ordered by weight descending then lex
/// ascending.
const std::vector<SignedSeq>& example1_expansion();

/// Weight-6 sequence labels in lex order: (222),(123),(033),(114),(024).
const std::vector<std::vector<int>>& example2_labels();

/// The 5x5 transition matrix on those labels.
const std::vector<std::vector<int>>& example2_r_matrix();

/// First-column recursion results: value of R_{n,(0,2,4)} for each weight-6
/// source n.
struct RecursionEntry {
    std::vector<int> source;
    std::int64_t value;
};
const std::vector<RecursionEntry>& example3_recursion();

/// The six nonzero remainder terms for m = (0,2,4): sorted exponents with
/// the sign each carries after reordering.
struct CancelTermFixture {
    int s;
    std::vector<int> sorted_exponents;
    int sign;
};
const std::vector<CancelTermFixture>& example3_cancellation();

/// The single s = 4 remainder term has raw exponents (4,1,4): a repeated
/// column, hence dropped as a zero determinant.
const std::vector<int>& example3_degenerate_raw();

/// phi(0,3,3,5) = (0,1,1,3,3,3) for a 4 x 6 grid.
struct PhiFixture {
    std::vector<int> input;    // bound 6
    std::vector<int> output;   // bound 4
};
const PhiFixture& phi_10_4();

/// Adding 3 beads to (0,3,3,5) can produce (1,3,5,5), whose row counts are
/// (0,2,2,3,3,4).
struct BeadStepFixture {
    std::vector<int> start;       // bound 6
    int l;
    std::vector<int> reachable;   // one of the results
    std::vector<int> reachable_rows;
};
const BeadStepFixture& bead_step_10_4();

} // namespace detsum::fixtures
