#pragma once

/**
 * @file symfunc.hpp
 * @brief Elementary symmetric sums, block-partition polynomials, the
 *        product expansion over index pairs, and the dual Pieri rule.
 */

#include <functional>
#include <vector>

#include "detsum/delta.hpp"
#include "detsum/scalar.hpp"
#include "detsum/subset.hpp"
#include "detsum/upseq.hpp"

namespace detsum {

/// S_l over S: sum over l-element subsets of S of the product of chosen
/// values. S_0 = 1; l > |S| yields 0 by convention (documented, not an
/// error). Negative l throws DegreeOutOfRange.
ExactScalar elementary_sym(int l, const SubsetMask& S, const EvalPoint& a);

/// Partition of I into blocks indexed by exponent value; blocks[m] holds
/// the elements assigned exponent m.
struct BlockPartition {
    std::vector<SubsetMask> blocks;
};

/// Enumerates every partition of I into blocks with |blocks[m]| == sizes[m].
/// Requires sum(sizes) == |I|.
void for_each_block_partition(const SubsetMask& I, const std::vector<int>& sizes,
                              const std::function<void(const BlockPartition&)>& fn);

/// A_{n_1..n_k}(I) = sum over block partitions of I with |I_m| = (number of
/// entries of nseq equal to m) of prod_{m >= 1} prod_{i in I_m} a_i^m.
ExactScalar a_poly(const UpSeq& nseq, const SubsetMask& I, const EvalPoint& a);

/// One signed term of the pair-product expansion:
///   prod_{i in I, j in I^c} (a_i a_j - 1)
///     = sum_p (-1)^{|I||I^c| - p} sum_{|nseq| = p} A_nseq prod_r S_{n_r}.
struct ExpansionTerm {
    int sign;     // +1 / -1
    UpSeq nseq;
};

/// The full signed term list, p descending from |I||I^c| to 0, lex
/// ascending within each weight.
std::vector<ExpansionTerm> product_expansion_terms(int k, int bound);

/// Verifies the displayed expansion exactly at the given point.
/// Requires |I| <= |I^c| and n <= 8.
bool product_expand_check(const SubsetMask& I, const EvalPoint& a);

/// Dual Pieri rule on strictly increasing exponent sequences: all m' with
/// m'_i - m_i in {0,1} and total growth l, keeping only strictly
/// increasing m' (candidates with repeated exponents have zero
/// determinants and are dropped). Semantic contract, over any variable
/// set of size |m|:  S_l * Delta_m = sum over returned m' of Delta_{m'}.
std::vector<ExponentSeq> pieri_multiply(int l, const ExponentSeq& m);

/// Unfiltered bump candidates (degenerate sequences retained); the raw
/// index set the rule sums over before zero determinants vanish.
std::vector<ExponentSeq> pieri_bump_candidates(int l, const ExponentSeq& m);

enum class VanishingLemma { L1, L2 };

/// Determinant with Vandermonde columns 1..a_i^{n-2} and last column
/// a_i^l * e_k({a_1..a_n} minus a_i) vanishes on both hypothesis regions:
///   L1: 0 <= k + l <= n - 2;   L2: 1 <= k, l <= n - 1 and k + l >= n.
/// Out-of-hypothesis parameters throw ParameterRangeError (there the
/// determinant genuinely need not vanish).
bool vanishing_lemma_check(VanishingLemma which, int n, int k, int l, const EvalPoint& a);

enum class ReductionLemma { L3, L4, L5, L5cor, L6, L6cor };

struct LemmaParams {
    int n = 0;
    int k = 0;
    ExponentSeq m;   // L6 / L6cor only: strictly increasing, m_1 >= 1
};

/// Evaluates both sides of the named reduction identity exactly:
///   L3:    special last column a_i^{n-1-k} e_k(excl i) vs (-1)^k full Vandermonde
///   L4:    last column (a_i - 1) prod_{j != i}(a_i a_j - 1) vs (prod a - 1) * Vandermonde
///   L5:    first column e_k(excl i) next to a_i..a_i^{n-1} vs exponents 0..n skipping n-k
///   L5cor: e_k * Vandermonde vs exponents 0..n skipping n-k
///   L6:    first column e_k(excl i) next to a_i^{m_1}..a_i^{m_{n-1}} vs Pieri sum
///   L6cor: e_k * Delta_{(0,m)} vs Pieri sum over (0,m)
///
/// Every identity here is polynomial in the a_i, of total degree at most
/// n(n+1)/2 for L3/L5/L5cor, n(n-1)/2 + 2n - 1 for L4, and
/// n*(max(m) + 1) for L6/L6cor; checks evaluate at random points rather
/// than expanding symbolically.
bool reduction_lemma_check(ReductionLemma which, const LemmaParams& params,
                           const EvalPoint& a);

} // namespace detsum
