#pragma once

/**
 * @file identity.hpp
 * @brief Both sides of the headline determinantal identity.
 *
 * The identity evaluated here:
 *
 *   sum over 1 <= x_1 < ... < x_n <= N of det[a_i^{x_j}]
 *     = prod_k a_k/(a_k - 1)
 *       * sum over J subset of {1..n} of
 *           (-1)^{nu(J^c)} gamma(J) gamma(J^c) prod_{j in J} a_j^N
 *
 * with gamma(J) = Delta(J) / prod_{{i,j} in J} (a_i a_j - 1). The left
 * side costs O(binomial(N, n)) determinants; the right side costs O(2^n)
 * field operations and touches N only through exponentiation.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detsum/delta.hpp"
#include "detsum/scalar.hpp"
#include "detsum/subset.hpp"

namespace detsum {

/// Subset weight gamma(J) = Delta(J) / prod over unordered pairs {i,j} of J
/// of (a_i a_j - 1); gamma(empty) = gamma({k}) = 1.
/// Throws PoleError (listing every offending pair) when a denominator
/// factor vanishes.
ExactScalar gamma(const SubsetMask& J, const EvalPoint& a);

struct BruteOptions {
    std::uint64_t workload_guard = 100'000'000;  // max tuple count
    int threads = 1;
};

/// Brute-force left side: exact sum of det[a_i^{x_j}] over all strictly
/// increasing tuples. Returns 0 for N < n. Throws WorkloadGuardExceeded
/// when binomial(N, n) exceeds the guard.
ExactScalar lhs_brute(const EvalPoint& a, std::int64_t N, const BruteOptions& opts = {});

struct RhsStats {
    std::uint64_t gamma_evals = 0;
};

/// Closed form right side. Requires a_k not in {0,1} and a_i a_j != 1 for
/// i < j; throws PoleError listing every violated constraint otherwise.
/// Evaluates gamma exactly 2^n times (metered via stats).
ExactScalar rhs_closed(const EvalPoint& a, std::int64_t N, RhsStats* stats = nullptr);

/// Same sum accumulated in a caller-chosen subset order; exact arithmetic
/// makes the result identical for any permutation of the 2^n masks.
ExactScalar rhs_closed_ordered(const EvalPoint& a, std::int64_t N,
                               const std::vector<std::uint64_t>& mask_order,
                               RhsStats* stats = nullptr);

/// The first-summation reduction: brute-forces the reduced determinant sum
/// over 1 <= x_2 < ... < x_n <= N-1 (columns a_i^{x_2}-1, a_i^{x_2+1}-1,
/// then a_i^{x_j}(a_i-1)), its weak-inequality extension over
/// 0 <= x_2 <= ... <= x_n <= N-1, and the closed subset sum; returns true
/// iff all three agree exactly.
bool reduced_sum_check(const EvalPoint& a, std::int64_t N, const BruteOptions& opts = {});

/// Residual polynomial identity:
///   sum over I of (-1)^{nu(I)} prod_{i in I, j in I^c} (a_i a_j - 1)
///     * Delta(I) Delta(I^c)  ==  0.
/// Needs only pairwise-distinct entries; no pole constraints.
bool zerosum_check(const EvalPoint& a);

struct IdentityReport {
    int n = 0;
    std::int64_t N = 0;
    Domain domain = Domain::gaussian_rational;
    std::uint64_t seed = 0;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    std::int64_t lhs_ns = 0;
    std::int64_t rhs_ns = 0;
};

/// Runs both sides at the given point with timings.
IdentityReport run_identity(const EvalPoint& a, std::int64_t N, std::uint64_t seed,
                            const BruteOptions& opts = {});

/// Closed form for n = 2 in the shape the reduction derivation produces:
///   ((a1 a2)^N - 1)/(a1 a2 - 1) * (a2 - a1) + a1^N - a2^N.
/// Equals rhs_closed without the prod a_k/(a_k - 1) prefactor.
ExactScalar n2_closed_shape(const EvalPoint& a, std::int64_t N);

} // namespace detsum
