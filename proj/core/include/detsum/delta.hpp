#pragma once

/**
 * @file delta.hpp
 * @brief Vandermonde and power-Vandermonde determinants over index subsets.
 *
 * Rows are always ordered by increasing element of J; every sign convention
 * downstream (the (-1)^nu factors, the complementary-minor split) depends
 * on that row order being fixed here and nowhere else.
 */

#include "detsum/matrix.hpp"
#include "detsum/scalar.hpp"
#include "detsum/subset.hpp"

namespace detsum {

/// Vandermonde determinant of the values indexed by J, i.e. the
/// determinant with rows (1, a_j, ..., a_j^{k-1}). Computed as the product
/// of pairwise differences; Delta(empty) = Delta({k}) = 1.
ExactScalar vandermonde_delta(const SubsetMask& J, const EvalPoint& a);

/// Determinant of [a_{j_r}^{m_c}] with rows in increasing J order and
/// columns in the given exponent order. Antisymmetric in m; zero when m
/// has repeats.
ExactScalar power_delta(const ExponentSeq& m, const SubsetMask& J, const EvalPoint& a);

/// Expansion of an n x n power determinant over its first k columns:
///   Delta_m({1..n}) = (-1)^{k(k+1)/2} sum_{|I|=k} (-1)^{nu(I)}
///                     Delta_{m_1..m_k}(I) Delta_{m_{k+1}..m_n}(I^c).
/// Returns whether both sides agree exactly.
bool laplace_split_check(const ExponentSeq& m, int k, const EvalPoint& a);

} // namespace detsum
