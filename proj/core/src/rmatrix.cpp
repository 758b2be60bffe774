#include "detsum/rmatrix.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "detsum/delta.hpp"
#include "detsum/symfunc.hpp"

namespace detsum {

std::vector<UpSeq> pieri_step(const UpSeq& c, int l) {
    if (l < 0) throw DegreeOutOfRange("pieri_step: negative degree");
    const int k = c.size();
    std::vector<UpSeq> out;
    if (k == 0) {
        if (l == 0) out.push_back(c);
        return out;
    }
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == k) {
            if (rem == 0) out.emplace_back(cur, c.bound);
            return;
        }
        const int hi = pos + 1 < k ? c.entries[pos + 1] : c.bound;
        for (int v = c.entries[pos]; v <= hi; ++v) {
            const int grow = v - c.entries[pos];
            if (grow > rem) break;
            cur[pos] = v;
            rec(pos + 1, rem - grow);
        }
    };
    rec(0, l);
    return out;
}

std::size_t RMatrix::index_of(const UpSeq& s) const {
    for (std::size_t i = 0; i < seqs.size(); ++i)
        if (seqs[i] == s) return i;
    throw EntryNotPresent("sequence " + s.str() + " is not in weight class " +
                          std::to_string(p));
}

std::int64_t RMatrix::at(const UpSeq& n, const UpSeq& m) const {
    return at_index(index_of(n), index_of(m));
}

std::int64_t RMatrix::at_index(std::size_t i, std::size_t j) const {
    auto it = cells.find({i, j});
    return it == cells.end() ? 0 : it->second;
}

std::string RMatrix::str() const {
    std::size_t w = 1;
    for (const UpSeq& s : seqs) w = std::max(w, s.str().size());
    for (const auto& [ij, v] : cells) w = std::max(w, std::to_string(v).size());
    std::ostringstream os;
    os << "R (k=" << k << ", bound=" << bound << ", p=" << p << ")\n";
    os << std::setw(static_cast<int>(w) + 1) << "";
    for (const UpSeq& s : seqs) os << ' ' << std::setw(static_cast<int>(w)) << s.str();
    os << '\n';
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        os << std::setw(static_cast<int>(w) + 1) << seqs[i].str();
        for (std::size_t j = 0; j < seqs.size(); ++j)
            os << ' ' << std::setw(static_cast<int>(w)) << at_index(i, j);
        os << '\n';
    }
    return os.str();
}

RMatrix r_matrix(int k, int bound, long p, ApplyOrder order) {
    if (k < 0 || bound < 0) throw ParameterRangeError("r_matrix: negative shape");
    if (p < 0 || p > long(k) * bound)
        throw WeightOutOfRange("r_matrix: weight " + std::to_string(p) +
                               " outside [0, " + std::to_string(long(k) * bound) + "]");
    RMatrix R;
    R.k = k;
    R.bound = bound;
    R.p = p;
    R.seqs = upseqs_of_weight(k, bound, p);

    std::map<UpSeq, std::size_t, UpSeqLexLess> index;
    for (std::size_t i = 0; i < R.seqs.size(); ++i) index.emplace(R.seqs[i], i);

    const UpSeq start(std::vector<int>(k, 0), bound);
    for (std::size_t src = 0; src < R.seqs.size(); ++src) {
        const UpSeq& n = R.seqs[src];
        std::map<UpSeq, std::int64_t, UpSeqLexLess> reached;
        reached.emplace(start, 1);
        auto apply = [&](int l) {
            std::map<UpSeq, std::int64_t, UpSeqLexLess> next;
            for (const auto& [conf, count] : reached)
                for (UpSeq& conf2 : pieri_step(conf, l)) next[conf2] += count;
            reached = std::move(next);
        };
        if (order == ApplyOrder::descending_index)
            for (int r = k - 1; r >= 0; --r) apply(n.entries[r]);
        else
            for (int r = 0; r < k; ++r) apply(n.entries[r]);
        for (const auto& [m, count] : reached)
            if (count) R.cells[{src, index.at(m)}] = count;
    }
    return R;
}

bool r_recursion_check(const UpSeq& n, const UpSeq& m, int s) {
    if (n.size() != m.size())
        throw LengthMismatch("r_recursion_check: |n| != |m|");
    if (n.weight() != m.weight())
        throw PreconditionViolated("r_recursion_check: weights differ");
    if (m.entries.empty() || m.entries.front() != 0)
        throw PreconditionViolated("r_recursion_check: requires m_1 = 0");
    auto it = std::find(n.entries.begin(), n.entries.end(), s);
    if (it == n.entries.end())
        throw EntryNotPresent("s = " + std::to_string(s) + " not among entries of " + n.str());

    const int k = n.size();
    const int bound = std::max(n.bound, m.bound);
    const std::int64_t lhs = r_matrix(k, bound, m.weight()).at(n, m);

    std::vector<int> reduced = n.entries;
    reduced.erase(std::find(reduced.begin(), reduced.end(), s));
    const UpSeq n_reduced(reduced, bound);

    const RMatrix sub = r_matrix(k - 1, bound, m.weight() - s);
    std::int64_t rhs = 0;
    std::vector<int> q(k - 1);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == k - 1) {
            if (rem != 0) return;
            std::vector<int> target(k - 1);
            for (int i = 0; i < k - 1; ++i) target[i] = m.entries[i + 1] - q[i];
            rhs += sub.at(n_reduced, UpSeq(target, bound));
            return;
        }
        const int cap = m.entries[pos + 1] - m.entries[pos];
        for (int v = 0; v <= std::min(cap, rem); ++v) {
            q[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, s);
    return lhs == rhs;
}

bool r_shift_check(const UpSeq& n, const UpSeq& m) {
    if (n.size() != m.size()) throw LengthMismatch("r_shift_check: |n| != |m|");
    if (n.weight() != m.weight())
        throw PreconditionViolated("r_shift_check: weights differ");
    if (m.entries.empty() || m.entries.front() < 1)
        throw PreconditionViolated("r_shift_check: requires m_1 >= 1");

    const int k = n.size();
    const int bound = std::max(n.bound, m.bound);
    const int c = m.entries.front();
    const std::int64_t lhs = r_matrix(k, bound, m.weight()).at(n, m);
    if (n.entries.front() < c) return lhs == 0;

    std::vector<int> ns = n.entries, ms = m.entries;
    for (int& v : ns) v -= c;
    for (int& v : ms) v -= c;
    const std::int64_t rhs =
        r_matrix(k, bound, m.weight() - long(k) * c).at(UpSeq(ns, bound), UpSeq(ms, bound));
    return lhs == rhs;
}

bool r_relations_check(const SubsetMask& I, const EvalPoint& a, long p) {
    const int n = a.size();
    if (I.n != n) throw IndexOutOfRange("subset universe != point size");
    if (n > 8) throw WorkloadGuardExceeded("r_relations_check guarded at n <= 8");
    const int k = I.size();
    const int bound = n - k;
    const SubsetMask Ic = I.complement();
    const RMatrix R = r_matrix(k, bound, p);
    const ExactScalar zero = a.scalar_zero();

    // (i) S-products against the psi basis on I^c
    for (std::size_t i = 0; i < R.seqs.size(); ++i) {
        ExactScalar lhs = vandermonde_delta(Ic, a);
        for (int nr : R.seqs[i].entries) lhs *= elementary_sym(nr, Ic, a);
        ExactScalar rhs = zero;
        for (std::size_t j = 0; j < R.seqs.size(); ++j) {
            const std::int64_t c = R.at_index(i, j);
            if (!c) continue;
            rhs += zero.from_integer(c) * power_delta(psi(R.seqs[j]), Ic, a);
        }
        if (lhs != rhs) return false;
    }

    // (ii) A-polynomials against the tilde basis on I
    for (std::size_t j = 0; j < R.seqs.size(); ++j) {
        ExactScalar acc = zero;
        for (std::size_t i = 0; i <= j; ++i) {
            const std::int64_t c = R.at_index(i, j);
            if (!c) continue;
            acc += zero.from_integer(c) * a_poly(R.seqs[i], I, a);
        }
        acc *= vandermonde_delta(I, a);
        if (acc != power_delta(tilde(R.seqs[j]), I, a)) return false;
    }
    return true;
}

CancellationOutcome cancellation_check(const UpSeq& m, const SubsetMask& I,
                                       const EvalPoint& a) {
    const int k = m.size();
    if (I.size() != k) throw DimensionMismatch("cancellation_check: |I| != |m|");
    if (I.n != a.size()) throw IndexOutOfRange("subset universe != point size");
    if (m.entries.empty() || m.entries.front() != 0)
        throw PreconditionViolated("cancellation_check: requires m_1 = 0");

    CancellationOutcome out;

    // Enumerate terms: s ascending, q lex ascending.
    for (int s = 1; s <= m.entries.back(); ++s) {
        std::vector<int> q(k - 1);
        std::function<void(int, int)> rec = [&](int pos, int rem) {
            if (pos == k - 1) {
                if (rem != 0) return;
                CancellationTerm t;
                t.s = s;
                t.q = q;
                t.raw_exponents.resize(k);
                t.raw_exponents[0] = s;
                for (int i = 1; i < k; ++i)
                    t.raw_exponents[i] = m.entries[i] - q[i - 1] + i;
                ExponentSeq sorted = t.raw_exponents;
                std::sort(sorted.begin(), sorted.end());
                t.degenerate =
                    std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
                if (!t.degenerate) {
                    t.sorted_exponents = sorted;
                    std::vector<int> norm(k);
                    for (int r = 0; r < k; ++r) norm[r] = sorted[r] - r;
                    t.normalized = UpSeq(norm, m.bound);
                    int below = 0;
                    for (int i = 1; i < k; ++i)
                        if (t.raw_exponents[i] < s) ++below;
                    t.position = below + 1;
                    t.sign = below % 2 ? -1 : +1;
                }
                out.terms.push_back(std::move(t));
                return;
            }
            const int cap = m.entries[pos + 1] - m.entries[pos];
            for (int v = 0; v <= std::min(cap, rem); ++v) {
                q[pos] = v;
                rec(pos + 1, rem - v);
            }
        };
        rec(0, s);
    }

    // Index the terms for partner lookup.
    std::map<std::pair<int, std::vector<int>>, int> by_sq;
    for (std::size_t i = 0; i < out.terms.size(); ++i)
        by_sq[{out.terms[i].s, out.terms[i].q}] = static_cast<int>(i);

    bool matched = true;
    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        CancellationTerm& t = out.terms[i];
        if (t.degenerate) continue;
        const std::vector<int>& nseq = t.normalized.entries;
        const int r = t.position;   // 1-based
        int s2;
        std::vector<int> q2 = t.q;
        if (r >= 2 && nseq[r - 1] <= m.entries[r - 1]) {
            // partner removes n_{r-1} instead: s' = n_{r-1} + r - 2
            s2 = nseq[r - 2] + r - 2;
            q2[r - 2] = t.q[r - 2] - nseq[r - 1] + nseq[r - 2] - 1;
        } else if (r <= k - 1) {
            // partner removes n_{r+1}: s' = n_{r+1} + r
            s2 = nseq[r] + r;
            q2[r - 1] = t.q[r - 1] + nseq[r] - nseq[r - 1] + 1;
        } else {
            matched = false;
            continue;
        }
        auto it = by_sq.find({s2, q2});
        if (it == by_sq.end()) {
            matched = false;
            continue;
        }
        t.partner = it->second;
        const CancellationTerm& other = out.terms[static_cast<std::size_t>(it->second)];
        if (other.degenerate || other.sorted_exponents != t.sorted_exponents ||
            other.sign != -t.sign)
            matched = false;
    }
    // The pairing must be an involution.
    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        const CancellationTerm& t = out.terms[i];
        if (t.degenerate) continue;
        if (t.partner < 0 ||
            out.terms[static_cast<std::size_t>(t.partner)].partner != static_cast<int>(i))
            matched = false;
    }
    out.perfect_matching = matched;

    ExactScalar total = a.scalar_zero();
    for (const CancellationTerm& t : out.terms)
        if (!t.degenerate) total += power_delta(t.raw_exponents, I, a);
    out.sum_is_zero = total.is_zero();
    return out;
}

ReducedExprDetail reduced_expr_detail(int n, std::uint64_t seed) {
    if (n < 2 || n > 12)
        throw PreconditionViolated("reduced_expr_check: 2 <= n <= 12");
    const EvalPoint a = sample_admissible(n, Domain::gaussian_rational, seed);
    const SubsetMask full = SubsetMask::full(n);
    const ExactScalar delta_full = vandermonde_delta(full, a);

    ReducedExprDetail d;
    d.n = n;
    d.count_per_k.assign(n + 1, 0);
    d.complementary_ok = true;
    d.determinant_values_ok = true;
    ExactScalar grand = a.scalar_zero();

    for (int k = 0; k <= n; ++k) {
        const int bound = n - k;
        for (long p = 0; p <= long(k) * bound; ++p) {
            for (const UpSeq& m : upseqs_of_weight(k, bound, p)) {
                ExponentSeq exps = tilde(m);
                const ExponentSeq rest = psi(m);
                exps.insert(exps.end(), rest.begin(), rest.end());
                std::vector<bool> seen(n, false);
                bool distinct = true;
                for (int e : exps) {
                    if (seen[e]) { distinct = false; break; }
                    seen[e] = true;
                }
                if (!distinct) continue;   // repeated column, determinant is 0

                ++d.count_per_k[k];
                if (2 * p != long(k) * bound) d.complementary_ok = false;
                for (int i = 1; i <= k; ++i)
                    if (m.entries[i - 1] + m.entries[k - i] != bound)
                        d.complementary_ok = false;

                const ExactScalar value = power_delta(exps, full, a);
                ExactScalar expected = delta_full;
                if ((long(k) * bound / 2) % 2) expected = -expected;
                if (value != expected) d.determinant_values_ok = false;

                const long sign_exp = long(k) * bound - p + long(k) * (k + 1) / 2;
                grand += sign_exp % 2 ? -value : value;
            }
        }
    }

    auto binom = [](long a_, long b_) -> long {
        if (b_ < 0 || b_ > a_) return 0;
        long r = 1;
        for (long i = 1; i <= b_; ++i) r = r * (a_ - b_ + i) / i;
        return r;
    };
    d.counts_match_binomials = true;
    for (int k = 0; k <= n; ++k) {
        long expect;
        if (long(k) * (n - k) % 2) expect = 0;
        else if (n % 2 == 0) expect = k % 2 ? 0 : binom(n / 2, k / 2);
        else expect = binom((n - 1) / 2, k / 2);
        if (d.count_per_k[k] != expect) d.counts_match_binomials = false;
    }

    long alt = 0;
    for (int k = 0; k <= n; ++k)
        alt += (long(k) * (k + 1) / 2) % 2 ? -d.count_per_k[k] : d.count_per_k[k];
    d.alternating_sum_vanishes = alt == 0;
    d.grand_total_zero = grand.is_zero();
    return d;
}

bool reduced_expr_check(int n, std::uint64_t seed) {
    return reduced_expr_detail(n, seed).pass();
}

} // namespace detsum
