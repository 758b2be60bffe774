#pragma once

/**
 * @file rmatrix.hpp
 * @brief The transition matrix R between S-products and power determinants,
 *        its recursion, the cancellation pairing of the remainder terms, and
 *        the final counting identity.
 *
 * R_{n,m} counts the configurations reached by applying the bead-level
 * Pieri step for l = n_k, n_{k-1}, ..., n_1 in turn, starting from the
 * empty diagram. It is upper-triangular with unit diagonal in the
 * last-entry-first lex order, and ties the two bases together:
 *
 *   prod_r S_{n_r} * Delta(I^c) = sum_m R_{n,m} Delta_{psi(m)}(I^c)
 *   sum_{n <= m} R_{n,m} A_n * Delta(I) = Delta_{tilde(m)}(I)
 */

#include <cstdint>
#include <map>
#include <vector>

#include "detsum/scalar.hpp"
#include "detsum/subset.hpp"
#include "detsum/upseq.hpp"

namespace detsum {

/// One application of S_l at the bead level: all configurations c' with
/// c_i <= c'_i <= c_{i+1} (c_{k+1} meaning the bound) and total growth l.
std::vector<UpSeq> pieri_step(const UpSeq& c, int l);

struct RMatrix {
    int k = 0;
    int bound = 0;
    long p = 0;
    std::vector<UpSeq> seqs;   // weight-p sequences, lex ascending
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> cells;  // nonzero only

    std::size_t index_of(const UpSeq& s) const;           // throws EntryNotPresent
    std::int64_t at(const UpSeq& n, const UpSeq& m) const;
    std::int64_t at_index(std::size_t i, std::size_t j) const;

    std::string str() const;   // aligned text, header row/column of seq names
};

enum class ApplyOrder { descending_index, ascending_index };

/// Builds R for weight class p. The canonical construction applies the
/// steps in descending index order (S_{n_k} first); ascending order is
/// exposed so the order-independence of the definition stays testable.
RMatrix r_matrix(int k, int bound, long p,
                 ApplyOrder order = ApplyOrder::descending_index);

/// Verifies the recursion
///   R_{n,m} = sum over q with |q| = s, 0 <= q_i <= m_{i+1} - m_i
///             of R_{n minus one s entry, (m_2..m_k) - q}
/// against independently built matrices. Requires m_1 = 0 (the shape the
/// proof reduces to) and s among the entries of n.
bool r_recursion_check(const UpSeq& n, const UpSeq& m, int s);

/// Shift property: for m_1 >= 1, R_{n,m} equals R_{n - m_1, m - m_1} when
/// n_1 >= m_1 and 0 otherwise.
bool r_shift_check(const UpSeq& n, const UpSeq& m);

/// Both change-of-basis relations at one point, for every sequence of
/// weight p: (i) prod_r S_{n_r} Delta(I^c) = sum_m R_{n,m} Delta_psi(m)(I^c)
/// and (ii) sum_{n <= m} R_{n,m} A_n Delta(I) = Delta_tilde(m)(I).
/// Guarded at n <= 8.
bool r_relations_check(const SubsetMask& I, const EvalPoint& a, long p);

/// One remainder term Delta_{tilde((s, m' - q))} of the first-column
/// expansion, plus its place in the cancellation pairing.
struct CancellationTerm {
    int s = 0;
    std::vector<int> q;            // k-1 entries, 0 <= q_i <= m_{i+1} - m_i
    ExponentSeq raw_exponents;     // tilde of (s, m'-q), unsorted
    bool degenerate = false;       // repeated exponent => zero determinant
    ExponentSeq sorted_exponents;  // nondegenerate terms only
    UpSeq normalized;              // n with tilde(n) == sorted_exponents
    int position = 0;              // r such that s = n_r + r - 1 (1-based)
    int sign = 0;                  // (-1)^(position-1)
    int partner = -1;              // index of the cancelling term
};

struct CancellationOutcome {
    std::vector<CancellationTerm> terms;   // s ascending, q lex ascending
    bool perfect_matching = false;         // pairing is an involution on
                                           // nonzero terms, opposite signs
    bool sum_is_zero = false;
    bool ok() const { return perfect_matching && sum_is_zero; }
};

/// Enumerates the remainder terms for m (requires m_1 = 0), computes the
/// partner of each via the q-shift constructions, and evaluates the total
/// at the given point.
CancellationOutcome cancellation_check(const UpSeq& m, const SubsetMask& I,
                                       const EvalPoint& a);

struct ReducedExprDetail {
    int n = 0;
    std::vector<long> count_per_k;        // nonzero terms at each k
    bool complementary_ok = false;        // m_i + m_{k-i+1} = n - k on all of them
    bool counts_match_binomials = false;
    bool determinant_values_ok = false;   // each = (-1)^{k(n-k)/2} Delta at the point
    bool alternating_sum_vanishes = false;
    bool grand_total_zero = false;        // the full signed sum, evaluated
    bool pass() const {
        return complementary_ok && counts_match_binomials && determinant_values_ok &&
               alternating_sum_vanishes && grand_total_zero;
    }
};

ReducedExprDetail reduced_expr_detail(int n, std::uint64_t seed = 0x5eedULL);

/// The counting identity behind the residual sum: enumerates the nonzero
/// Delta_{tilde(m), psi(m)} terms, checks the complementarity condition,
/// the binomial counts, the common determinant value, and the vanishing of
/// the alternating sum. 2 <= n <= 12.
bool reduced_expr_check(int n, std::uint64_t seed = 0x5eedULL);

} // namespace detsum
