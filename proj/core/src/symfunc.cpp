#include "detsum/symfunc.hpp"

#include <algorithm>
#include <functional>

namespace detsum {

namespace {

/// e_k over the universe minus one excluded element.
ExactScalar esym_excluding(int k, int excluded, const EvalPoint& a) {
    SubsetMask s = SubsetMask::full(a.size());
    s.bits &= ~(1ULL << (excluded - 1));
    return elementary_sym(k, s, a);
}

Matrix vandermonde_with_last_column(const EvalPoint& a,
                                    const std::function<ExactScalar(int)>& last) {
    const int n = a.size();
    Matrix m(n, n, a.scalar_zero());
    for (int i = 1; i <= n; ++i) {
        ExactScalar acc = a.scalar_one();
        for (int c = 0; c <= n - 2; ++c) {
            m.at(i - 1, c) = acc;
            acc *= a[i];
        }
        m.at(i - 1, n - 1) = last(i);
    }
    return m;
}

/// Exponents 0..n with n-k omitted (the L5/L5cor right-hand side).
ExponentSeq skip_exponent_seq(int n, int k) {
    ExponentSeq e;
    for (int v = 0; v <= n; ++v)
        if (v != n - k) e.push_back(v);
    return e;
}

ExponentSeq prepend_zero(const ExponentSeq& m) {
    ExponentSeq out;
    out.reserve(m.size() + 1);
    out.push_back(0);
    out.insert(out.end(), m.begin(), m.end());
    return out;
}

void require_strict_increasing_from_one(const ExponentSeq& m) {
    if (m.empty() || m[0] < 1)
        throw ParameterRangeError("exponent sequence must start at m_1 >= 1");
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] <= m[i - 1])
            throw ParameterRangeError("exponent sequence must be strictly increasing");
}

} // namespace

ExactScalar elementary_sym(int l, const SubsetMask& S, const EvalPoint& a) {
    if (S.n != a.size()) throw IndexOutOfRange("subset universe != point size");
    if (l < 0) throw DegreeOutOfRange("elementary_sym: negative degree");
    if (l > S.size()) return a.scalar_zero();
    // e[j] after consuming a prefix of S = e_j of that prefix
    std::vector<ExactScalar> e(l + 1, a.scalar_zero());
    e[0] = a.scalar_one();
    for (int elem : S.elements())
        for (int j = l; j >= 1; --j)
            e[j] += e[j - 1] * a[elem];
    return e[l];
}

void for_each_block_partition(const SubsetMask& I, const std::vector<int>& sizes,
                              const std::function<void(const BlockPartition&)>& fn) {
    long total = 0;
    for (int s : sizes) {
        if (s < 0) throw ParameterRangeError("negative block size");
        total += s;
    }
    if (total != I.size())
        throw DimensionMismatch("block sizes must sum to |I|");

    BlockPartition part;
    part.blocks.assign(sizes.size(), SubsetMask::empty(I.n));
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t m,
                                                              std::uint64_t remaining) {
        if (m == sizes.size()) {
            fn(part);
            return;
        }
        const int want = sizes[m];
        // iterate all submasks of `remaining` with popcount == want
        for (std::uint64_t sub = remaining;; sub = (sub - 1) & remaining) {
            if (__builtin_popcountll(sub) == want) {
                part.blocks[m] = SubsetMask(I.n, sub);
                rec(m + 1, remaining & ~sub);
            }
            if (sub == 0) break;
        }
    };
    rec(0, I.bits);
}

ExactScalar a_poly(const UpSeq& nseq, const SubsetMask& I, const EvalPoint& a) {
    if (I.n != a.size()) throw IndexOutOfRange("subset universe != point size");
    if (nseq.size() != I.size())
        throw DimensionMismatch("a_poly: |nseq| = " + std::to_string(nseq.size()) +
                                " but |I| = " + std::to_string(I.size()));
    const int maxv = nseq.entries.empty() ? 0 : nseq.entries.back();
    std::vector<int> sizes(maxv + 1, 0);
    for (int v : nseq.entries) ++sizes[v];

    ExactScalar sum = a.scalar_zero();
    for_each_block_partition(I, sizes, [&](const BlockPartition& part) {
        ExactScalar term = a.scalar_one();
        for (int m = 1; m <= maxv; ++m)
            for (int i : part.blocks[m].elements())
                term *= pow(a[i], static_cast<std::uint64_t>(m));
        sum += term;
    });
    return sum;
}

std::vector<ExpansionTerm> product_expansion_terms(int k, int bound) {
    std::vector<ExpansionTerm> out;
    const long pmax = long(k) * bound;
    for (long p = pmax; p >= 0; --p)
        for (UpSeq& s : upseqs_of_weight(k, bound, p))
            out.push_back(ExpansionTerm{(pmax - p) % 2 ? -1 : +1, std::move(s)});
    return out;
}

bool product_expand_check(const SubsetMask& I, const EvalPoint& a) {
    const int n = a.size();
    if (I.n != n) throw IndexOutOfRange("subset universe != point size");
    if (n > 8) throw WorkloadGuardExceeded("product_expand_check guarded at n <= 8");
    const SubsetMask Ic = I.complement();
    if (I.size() > Ic.size())
        throw PreconditionViolated("product_expand_check needs |I| <= |I^c|");

    const ExactScalar one = a.scalar_one();
    ExactScalar lhs = one;
    for (int i : I.elements())
        for (int j : Ic.elements()) lhs *= a[i] * a[j] - one;

    ExactScalar rhs = a.scalar_zero();
    for (const ExpansionTerm& t : product_expansion_terms(I.size(), Ic.size())) {
        ExactScalar term = a_poly(t.nseq, I, a);
        for (int nr : t.nseq.entries) term *= elementary_sym(nr, Ic, a);
        rhs += t.sign < 0 ? -term : term;
    }
    return lhs == rhs;
}

std::vector<ExponentSeq> pieri_bump_candidates(int l, const ExponentSeq& m) {
    if (l < 0) throw DegreeOutOfRange("pieri: negative degree");
    const int len = static_cast<int>(m.size());
    std::vector<ExponentSeq> out;
    if (l > len) return out;
    // choose which l positions grow by one
    std::vector<int> idx(l);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == l) {
            ExponentSeq c = m;
            for (int i : idx) ++c[i];
            out.push_back(std::move(c));
            return;
        }
        for (int i = start; i < len; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<ExponentSeq> pieri_multiply(int l, const ExponentSeq& m) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] <= m[i - 1])
            throw ParameterRangeError("pieri_multiply needs strictly increasing input");
    for (int e : m)
        if (e < 0) throw ParameterRangeError("pieri_multiply needs nonnegative exponents");
    std::vector<ExponentSeq> out;
    for (ExponentSeq& c : pieri_bump_candidates(l, m)) {
        bool strict = true;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i] <= c[i - 1]) { strict = false; break; }
        if (strict) out.push_back(std::move(c));
    }
    return out;
}

bool vanishing_lemma_check(VanishingLemma which, int n, int k, int l, const EvalPoint& a) {
    if (a.size() != n) throw DimensionMismatch("point size != n");
    if (n < 3) throw ParameterRangeError("vanishing lemmas need n >= 3");
    if (which == VanishingLemma::L1) {
        if (k < 0 || l < 0 || k + l > n - 2)
            throw ParameterRangeError("L1 needs 0 <= k + l <= n - 2");
    } else {
        if (k < 1 || k > n - 1 || l < 1 || l > n - 1 || k + l < n)
            throw ParameterRangeError("L2 needs 1 <= k, l <= n - 1 and k + l >= n");
    }
    Matrix m = vandermonde_with_last_column(a, [&](int i) {
        return pow(a[i], static_cast<std::uint64_t>(l)) * esym_excluding(k, i, a);
    });
    return determinant(m).is_zero();
}

bool reduction_lemma_check(ReductionLemma which, const LemmaParams& params,
                           const EvalPoint& a) {
    const int n = params.n;
    const int k = params.k;
    if (a.size() != n) throw DimensionMismatch("point size != n");
    const SubsetMask full = SubsetMask::full(n);
    const ExactScalar one = a.scalar_one();

    switch (which) {
        case ReductionLemma::L3: {
            if (n < 3 || k < 0 || k > n - 2)
                throw ParameterRangeError("L3 needs n >= 3 and 0 <= k <= n - 2");
            Matrix m = vandermonde_with_last_column(a, [&](int i) {
                return pow(a[i], static_cast<std::uint64_t>(n - 1 - k)) *
                       esym_excluding(k, i, a);
            });
            ExactScalar rhs = vandermonde_delta(full, a);
            if (k % 2) rhs = -rhs;
            return determinant(m) == rhs;
        }
        case ReductionLemma::L4: {
            if (n < 3) throw ParameterRangeError("L4 needs n >= 3");
            Matrix m = vandermonde_with_last_column(a, [&](int i) {
                ExactScalar prod = a[i] - one;
                for (int j = 1; j <= n; ++j)
                    if (j != i) prod *= a[i] * a[j] - one;
                return prod;
            });
            ExactScalar all = one;
            for (int j = 1; j <= n; ++j) all *= a[j];
            return determinant(m) == (all - one) * vandermonde_delta(full, a);
        }
        case ReductionLemma::L5: {
            if (n < 2 || k < 1 || k > n - 1)
                throw ParameterRangeError("L5 needs n >= 2 and 1 <= k <= n - 1");
            Matrix m(n, n, a.scalar_zero());
            for (int i = 1; i <= n; ++i) {
                m.at(i - 1, 0) = esym_excluding(k, i, a);
                for (int c = 1; c <= n - 1; ++c)
                    m.at(i - 1, c) = pow(a[i], static_cast<std::uint64_t>(c));
            }
            return determinant(m) == power_delta(skip_exponent_seq(n, k), full, a);
        }
        case ReductionLemma::L5cor: {
            if (n < 2 || k < 1 || k > n - 1)
                throw ParameterRangeError("L5cor needs n >= 2 and 1 <= k <= n - 1");
            ExactScalar lhs = elementary_sym(k, full, a) * vandermonde_delta(full, a);
            return lhs == power_delta(skip_exponent_seq(n, k), full, a);
        }
        case ReductionLemma::L6: {
            if (k < 1 || k > n - 1)
                throw ParameterRangeError("L6 needs 1 <= k <= n - 1");
            if (static_cast<int>(params.m.size()) != n - 1)
                throw DimensionMismatch("L6 needs |m| = n - 1");
            require_strict_increasing_from_one(params.m);
            Matrix m(n, n, a.scalar_zero());
            for (int i = 1; i <= n; ++i) {
                m.at(i - 1, 0) = esym_excluding(k, i, a);
                for (int c = 1; c <= n - 1; ++c)
                    m.at(i - 1, c) = pow(a[i], static_cast<std::uint64_t>(params.m[c - 1]));
            }
            ExactScalar rhs = a.scalar_zero();
            for (const ExponentSeq& mp : pieri_multiply(k, params.m))
                rhs += power_delta(prepend_zero(mp), full, a);
            return determinant(m) == rhs;
        }
        case ReductionLemma::L6cor: {
            if (k < 1 || k > n)
                throw ParameterRangeError("L6cor needs 1 <= k <= n");
            if (static_cast<int>(params.m.size()) != n - 1)
                throw DimensionMismatch("L6cor needs |m| = n - 1");
            require_strict_increasing_from_one(params.m);
            const ExponentSeq base = prepend_zero(params.m);
            ExactScalar lhs = elementary_sym(k, full, a) * power_delta(base, full, a);
            ExactScalar rhs = a.scalar_zero();
            for (const ExponentSeq& mp : pieri_multiply(k, base))
                rhs += power_delta(mp, full, a);
            return lhs == rhs;
        }
    }
    throw Error("unreachable lemma id");
}

} // namespace detsum
