#include "detsum/identity.hpp"

#include <chrono>
#include <functional>
#include <thread>

namespace detsum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// binomial(n, k) clamped at cap + 1 (so "> cap" is detectable without overflow).
u64 binomial_clamped(std::int64_t n, std::int64_t k, u64 cap) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    u128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * u128(n - k + i) / u128(i);
        if (acc > cap) return cap + 1;
    }
    return static_cast<u64>(acc);
}

std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

/// Enumerates tuples lo <= x_1 (<|<=) ... (<|<=) x_len <= hi.
template <class F>
void for_each_tuple(int len, std::int64_t lo, std::int64_t hi, bool strict, F&& fn) {
    if (len == 0) {
        std::vector<std::int64_t> empty;
        fn(empty);
        return;
    }
    std::vector<std::int64_t> xs(static_cast<std::size_t>(len));
    std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t start) {
        if (pos == len) {
            fn(xs);
            return;
        }
        for (std::int64_t v = start; v <= hi; ++v) {
            xs[pos] = v;
            rec(pos + 1, strict ? v + 1 : v);
        }
    };
    rec(0, lo);
}

// ---- prime-field fast path -------------------------------------------------

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 base, u64 e, u64 p) {
    u64 acc = 1 % p;
    while (e) {
        if (e & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return acc;
}

u64 det_mod(std::vector<u64>& m, int n, u64 p) {
    if (n == 1) return m[0];
    if (n == 2) return submod(mulmod(m[0], m[3], p), mulmod(m[1], m[2], p), p);
    if (n == 3) {
        u64 c0 = submod(mulmod(m[4], m[8], p), mulmod(m[5], m[7], p), p);
        u64 c1 = submod(mulmod(m[3], m[8], p), mulmod(m[5], m[6], p), p);
        u64 c2 = submod(mulmod(m[3], m[7], p), mulmod(m[4], m[6], p), p);
        u64 d = mulmod(m[0], c0, p);
        d = submod(d, mulmod(m[1], c1, p), p);
        return addmod(d, mulmod(m[2], c2, p), p);
    }
    u64 det = 1;
    bool neg = false;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[std::size_t(r) * n + col]) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int c = col; c < n; ++c)
                std::swap(m[std::size_t(piv) * n + c],
                          m[std::size_t(col) * n + c]);
            neg = !neg;
        }
        const u64 pv = m[std::size_t(col) * n + col];
        det = mulmod(det, pv, p);
        const u64 inv = powmod(pv, p - 2, p);
        for (int r = col + 1; r < n; ++r) {
            u64& head = m[std::size_t(r) * n + col];
            if (!head) continue;
            const u64 f = mulmod(head, inv, p);
            head = 0;
            for (int c = col + 1; c < n; ++c) {
                u64& e = m[std::size_t(r) * n + c];
                e = submod(e, mulmod(f, m[std::size_t(col) * n + c], p), p);
            }
        }
    }
    return neg && det ? p - det : det;
}

u64 lhs_brute_mod(const std::vector<u64>& vals, u64 p, std::int64_t N, int threads) {
    const int n = static_cast<int>(vals.size());
    // pow_tab[i][x] = a_i^x for x in [0, N]
    std::vector<std::vector<u64>> pow_tab(n);
    for (int i = 0; i < n; ++i) {
        auto& t = pow_tab[i];
        t.resize(std::size_t(N) + 1);
        t[0] = 1;
        for (std::int64_t x = 1; x <= N; ++x) t[x] = mulmod(t[x - 1], vals[i], p);
    }

    auto sum_range = [&](std::int64_t x1_lo, std::int64_t x1_hi) -> u64 {
        u64 acc = 0;
        std::vector<u64> m(std::size_t(n) * n);
        std::vector<std::int64_t> xs(n);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        m[std::size_t(i) * n + j] =
                            pow_tab[i][xs[j]];
                acc = addmod(acc, det_mod(m, n, p), p);
                return;
            }
            for (std::int64_t v = xs[pos - 1] + 1; v <= N; ++v) {
                xs[pos] = v;
                rec(pos + 1);
            }
        };
        for (std::int64_t x1 = x1_lo; x1 <= x1_hi; ++x1) {
            xs[0] = x1;
            rec(1);
        }
        return acc;
    };

    const std::int64_t x1_max = N - n + 1;
    if (threads <= 1 || x1_max < 2) return sum_range(1, x1_max);

    const int t = static_cast<int>(std::min<std::int64_t>(threads, x1_max));
    std::vector<u64> partial(t, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) {
        const std::int64_t lo = 1 + x1_max * w / t;
        const std::int64_t hi = x1_max * (w + 1) / t;
        pool.emplace_back([&, w, lo, hi] { partial[w] = sum_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    u64 acc = 0;
    for (u64 v : partial) acc = addmod(acc, v, p);
    return acc;
}

// ---- shared closed-form subset sum ------------------------------------------

ExactScalar subset_closed_sum(const EvalPoint& a, std::int64_t N,
                              const std::vector<u64>* order, RhsStats* stats) {
    const int n = a.size();
    const ExactScalar one = a.scalar_one();
    const u64 count = u64(1) << n;

    std::vector<ExactScalar> gammas;
    gammas.reserve(count);
    for (u64 mask = 0; mask < count; ++mask) {
        gammas.push_back(gamma(SubsetMask(n, mask), a));
        if (stats) ++stats->gamma_evals;
    }

    std::vector<ExactScalar> prod_n(count, one);
    for (int k = 1; k <= n; ++k) {
        const ExactScalar pk = pow(a[k], static_cast<u64>(N));
        const u64 bit = u64(1) << (k - 1);
        for (u64 mask = 0; mask < count; ++mask)
            if (mask & bit) prod_n[mask] = prod_n[mask ^ bit] * pk;
    }

    ExactScalar sum = a.scalar_zero();
    for (u64 idx = 0; idx < count; ++idx) {
        const u64 mask = order ? (*order)[idx] : idx;
        const SubsetMask J(n, mask);
        ExactScalar term = gammas[mask] * gammas[J.complement().bits] * prod_n[mask];
        if (nu(J.complement()) % 2) term = -term;
        sum += term;
    }
    return sum;
}

} // namespace

ExactScalar gamma(const SubsetMask& J, const EvalPoint& a) {
    if (J.n != a.size()) throw IndexOutOfRange("subset universe != point size");
    const std::vector<int> elems = J.elements();
    const ExactScalar one = a.scalar_one();
    ExactScalar den = one;
    std::vector<std::string> poles;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            ExactScalar f = a[elems[i]] * a[elems[j]] - one;
            if (f.is_zero())
                poles.push_back("a_" + std::to_string(elems[i]) + "*a_" +
                                std::to_string(elems[j]) + " = 1");
            den *= f;
        }
    if (!poles.empty()) throw PoleError(std::move(poles));
    return vandermonde_delta(J, a) / den;
}

ExactScalar lhs_brute(const EvalPoint& a, std::int64_t N, const BruteOptions& opts) {
    const int n = a.size();
    if (N < n) return a.scalar_zero();
    const u64 tuples = binomial_clamped(N, n, opts.workload_guard);
    if (tuples > opts.workload_guard)
        throw WorkloadGuardExceeded("lhs_brute: binomial(" + std::to_string(N) + ", " +
                                    std::to_string(n) + ") exceeds guard " +
                                    std::to_string(opts.workload_guard));

    if (!a.values[0].is_gaussian()) {
        const u64 p = a.values[0].modulus();
        std::vector<u64> vals;
        vals.reserve(n);
        for (const auto& v : a.values) vals.push_back(v.residue_value());
        return ExactScalar::residue(lhs_brute_mod(vals, p, N, opts.threads), p);
    }

    // pow_tab[i][x] = a_i^x
    std::vector<std::vector<ExactScalar>> pow_tab(n);
    for (int i = 0; i < n; ++i) {
        auto& t = pow_tab[i];
        t.reserve(std::size_t(N) + 1);
        t.push_back(a.scalar_one());
        for (std::int64_t x = 1; x <= N; ++x) t.push_back(t.back() * a.values[i]);
    }
    ExactScalar sum = a.scalar_zero();
    Matrix m(n, n, a.scalar_zero());
    for_each_tuple(n, 1, N, /*strict=*/true, [&](const std::vector<std::int64_t>& xs) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = pow_tab[i][xs[j]];
        sum += determinant(m);
    });
    return sum;
}

ExactScalar rhs_closed(const EvalPoint& a, std::int64_t N, RhsStats* stats) {
    if (N < 0) throw ParameterRangeError("rhs_closed: N must be >= 0");
    auto poles = pole_violations_closed_form(a.values);
    if (!poles.empty()) throw PoleError(std::move(poles));

    const ExactScalar one = a.scalar_one();
    ExactScalar prefactor = one;
    for (int k = 1; k <= a.size(); ++k) prefactor *= a[k] / (a[k] - one);
    return prefactor * subset_closed_sum(a, N, nullptr, stats);
}

ExactScalar rhs_closed_ordered(const EvalPoint& a, std::int64_t N,
                               const std::vector<std::uint64_t>& mask_order,
                               RhsStats* stats) {
    if (N < 0) throw ParameterRangeError("rhs_closed: N must be >= 0");
    if (mask_order.size() != (std::size_t(1) << a.size()))
        throw DimensionMismatch("mask order must enumerate all 2^n subsets");
    auto poles = pole_violations_closed_form(a.values);
    if (!poles.empty()) throw PoleError(std::move(poles));

    const ExactScalar one = a.scalar_one();
    ExactScalar prefactor = one;
    for (int k = 1; k <= a.size(); ++k) prefactor *= a[k] / (a[k] - one);
    return prefactor * subset_closed_sum(a, N, &mask_order, stats);
}

bool reduced_sum_check(const EvalPoint& a, std::int64_t N, const BruteOptions& opts) {
    const int n = a.size();
    if (n < 2) throw PreconditionViolated("reduced_sum_check needs n >= 2");
    if (N < 1) throw ParameterRangeError("reduced_sum_check: N must be >= 1");
    auto violations = admissibility_violations(a.values);
    if (!violations.empty()) throw PoleError(std::move(violations));

    const u64 strict_tuples = binomial_clamped(N - 1, n - 1, opts.workload_guard);
    const u64 weak_tuples = binomial_clamped(N + n - 2, n - 1, opts.workload_guard);
    if (strict_tuples > opts.workload_guard || weak_tuples > opts.workload_guard)
        throw WorkloadGuardExceeded("reduced_sum_check workload exceeds guard");

    const ExactScalar one = a.scalar_one();
    Matrix m(n, n, a.scalar_zero());
    auto fill = [&](const std::vector<std::int64_t>& xs) {
        // xs = (x_2, ..., x_n)
        for (int i = 1; i <= n; ++i) {
            const ExactScalar& ai = a[i];
            m.at(i - 1, 0) = pow(ai, static_cast<u64>(xs[0])) - one;
            m.at(i - 1, 1) = pow(ai, static_cast<u64>(xs[0]) + 1) - one;
            for (int c = 2; c < n; ++c)
                m.at(i - 1, c) = pow(ai, static_cast<u64>(xs[c - 1])) * (ai - one);
        }
    };

    ExactScalar strict_sum = a.scalar_zero();
    for_each_tuple(n - 1, 1, N - 1, /*strict=*/true, [&](const std::vector<std::int64_t>& xs) {
        fill(xs);
        strict_sum += determinant(m);
    });

    ExactScalar weak_sum = a.scalar_zero();
    for_each_tuple(n - 1, 0, N - 1, /*strict=*/false, [&](const std::vector<std::int64_t>& xs) {
        fill(xs);
        weak_sum += determinant(m);
    });

    const ExactScalar closed = subset_closed_sum(a, N, nullptr, nullptr);
    return strict_sum == closed && weak_sum == strict_sum;
}

bool zerosum_check(const EvalPoint& a) {
    const int n = a.size();
    const ExactScalar one = a.scalar_one();

    // pair_f[i][j] = a_i * a_j - 1 (1-based)
    std::vector<std::vector<ExactScalar>> pair_f(n + 1, std::vector<ExactScalar>(n + 1, one));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            pair_f[i][j] = a[i] * a[j] - one;

    ExactScalar sum = a.scalar_zero();
    for_each_subset(n, [&](const SubsetMask& I) {
        const SubsetMask Ic = I.complement();
        ExactScalar term = vandermonde_delta(I, a) * vandermonde_delta(Ic, a);
        for (int i : I.elements())
            for (int j : Ic.elements())
                term *= pair_f[i][j];
        if (nu(I) % 2) term = -term;
        sum += term;
    });
    return sum.is_zero();
}

IdentityReport run_identity(const EvalPoint& a, std::int64_t N, std::uint64_t seed,
                            const BruteOptions& opts) {
    IdentityReport rep;
    rep.n = a.size();
    rep.N = N;
    rep.domain = a.values[0].is_gaussian() ? Domain::gaussian_rational : Domain::prime_field;
    rep.seed = seed;

    std::int64_t t0 = now_ns();
    const ExactScalar lhs = lhs_brute(a, N, opts);
    std::int64_t t1 = now_ns();
    const ExactScalar rhs = rhs_closed(a, N);
    std::int64_t t2 = now_ns();

    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.equal = lhs == rhs;
    rep.lhs_ns = t1 - t0;
    rep.rhs_ns = t2 - t1;
    return rep;
}

ExactScalar n2_closed_shape(const EvalPoint& a, std::int64_t N) {
    if (a.size() != 2) throw DimensionMismatch("n2_closed_shape needs n = 2");
    if (N < 0) throw ParameterRangeError("n2_closed_shape: N must be >= 0");
    const ExactScalar one = a.scalar_one();
    const ExactScalar q = a[1] * a[2];
    if ((q - one).is_zero()) throw PoleError({"a_1*a_2 = 1"});
    return (pow(q, static_cast<u64>(N)) - one) / (q - one) * (a[2] - a[1]) +
           pow(a[1], static_cast<u64>(N)) - pow(a[2], static_cast<u64>(N));
}

} // namespace detsum
