#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "detsum/identity.hpp"
#include "detsum/prng.hpp"

using namespace detsum;

namespace {

constexpr std::uint64_t kMersenne61 = 2305843009213693951ULL;

EvalPoint gauss_point(int n, std::uint64_t seed) {
    return sample_admissible(n, Domain::gaussian_rational, seed);
}

EvalPoint gf_point(int n, std::uint64_t seed) {
    SampleOptions so;
    so.modulus = kMersenne61;
    return sample_admissible(n, Domain::prime_field, seed, so);
}

} // namespace

TEST_SUITE_BEGIN("identity");

TEST_CASE("nu") {
    CHECK(nu(SubsetMask::empty(5)) == 0);
    CHECK(nu(SubsetMask::of(5, {1, 3})) == 4);
    for (int n = 1; n <= 8; ++n) CHECK(nu(SubsetMask::full(n)) == n * (n + 1) / 2);
}

TEST_CASE("gamma fixed values") {
    EvalPoint a = make_eval_point(
        {ExactScalar::integer(2), ExactScalar::integer(3), ExactScalar::integer(5)});
    CHECK(gamma(SubsetMask::empty(3), a).is_one());
    CHECK(gamma(SubsetMask::of(3, {2}), a).is_one());
    // Delta = 1, denominator 2*3 - 1 = 5
    CHECK(gamma(SubsetMask::of(3, {1, 2}), a) == ExactScalar::rational(1, 5));
    // Delta = 6, denominator 5 * 9 * 14 = 630
    CHECK(gamma(SubsetMask::full(3), a) == ExactScalar::rational(1, 105));
}

TEST_CASE("gamma pole reporting") {
    EvalPoint bad;
    bad.values = {ExactScalar::integer(2), ExactScalar::rational(1, 2)};
    bad.admissible = false;
    CHECK_THROWS_AS((void)gamma(SubsetMask::full(2), bad), PoleError);
}

TEST_CASE("lhs_brute fixed values") {
    EvalPoint two = make_eval_point({ExactScalar::integer(2)});
    CHECK(lhs_brute(two, 3) == ExactScalar::integer(14));   // 2 + 4 + 8
    CHECK(lhs_brute(two, 0).is_zero());

    EvalPoint a23 = make_eval_point({ExactScalar::integer(2), ExactScalar::integer(3)});
    CHECK(lhs_brute(a23, 2) == ExactScalar::integer(6));    // det [[2,4],[3,9]]
    CHECK(lhs_brute(a23, 1).is_zero());                     // N < n

    BruteOptions tiny;
    tiny.workload_guard = 10;
    CHECK_THROWS_AS((void)lhs_brute(a23, 100, tiny), WorkloadGuardExceeded);
}

TEST_CASE("rhs_closed fixed values and poles") {
    EvalPoint two = make_eval_point({ExactScalar::integer(2)});
    CHECK(rhs_closed(two, 3) == ExactScalar::integer(14));

    EvalPoint a23 = make_eval_point({ExactScalar::integer(2), ExactScalar::integer(3)});
    CHECK(rhs_closed(a23, 2) == ExactScalar::integer(6));

    // a_1 = 1 and a_2 a_3 = 1: both constraints must be reported
    EvalPoint bad;
    bad.values = {ExactScalar::integer(1), ExactScalar::integer(2),
                  ExactScalar::rational(1, 2)};
    bad.admissible = false;
    try {
        (void)rhs_closed(bad, 3);
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.violations.size() == 2);
    }
}

TEST_CASE("closed form vanishes below the horizon") {
    SplitMix64 g(3);
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 3; ++t) {
            EvalPoint a = gauss_point(n, g.next());
            for (std::int64_t N = 0; N < n; ++N) CHECK(rhs_closed(a, N).is_zero());
        }
}

TEST_CASE("main identity over Gaussian rationals, small grid") {
    SplitMix64 g(101);
    for (int n = 1; n <= 4; ++n)
        for (std::int64_t N = n; N <= 7; ++N)
            for (int t = 0; t < 3; ++t) {
                EvalPoint a = gauss_point(n, g.next());
                const ExactScalar l = lhs_brute(a, N);
                const ExactScalar r = rhs_closed(a, N);
                CHECK_MESSAGE(l == r, "n=", n, " N=", N, " a=", a.str());
            }
}

TEST_CASE("main identity over GF(2^61-1), fast kernel vs generic") {
    SplitMix64 g(103);
    for (int n = 2; n <= 4; ++n) {
        const std::int64_t N = n == 2 ? 300 : n == 3 ? 150 : 40;
        EvalPoint a = gf_point(n, g.next());
        const ExactScalar brute = lhs_brute(a, N);
        CHECK(brute == rhs_closed(a, N));

        // generic ExactScalar path must agree with the modular kernel
        const std::int64_t smallN = n + 3;
        EvalPoint tiny = gf_point(n, g.next());
        Matrix m(n, n, tiny.scalar_zero());
        ExactScalar generic = tiny.scalar_zero();
        std::vector<int> xs(n);
        std::iota(xs.begin(), xs.end(), 1);
        // enumerate strictly increasing tuples by odometer
        while (true) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.at(i, j) = pow(tiny[i + 1], std::uint64_t(xs[j]));
            generic += determinant(m);
            int pos = n - 1;
            while (pos >= 0 && xs[pos] == smallN - (n - 1 - pos)) --pos;
            if (pos < 0) break;
            ++xs[pos];
            for (int q = pos + 1; q < n; ++q) xs[q] = xs[q - 1] + 1;
        }
        CHECK(generic == lhs_brute(tiny, smallN));
    }
}

TEST_CASE("lhs_brute threaded equals single-threaded") {
    EvalPoint a = gf_point(3, 5);
    BruteOptions one, four;
    four.threads = 4;
    CHECK(lhs_brute(a, 60, one) == lhs_brute(a, 60, four));

    EvalPoint q = gauss_point(3, 6);
    CHECK(lhs_brute(q, 8, one) == lhs_brute(q, 8, four));
}

TEST_CASE("permutation covariance") {
    SplitMix64 g(107);
    for (int t = 0; t < 5; ++t) {
        EvalPoint a = gauss_point(3, g.next());
        // swap entries 1 and 3: an odd permutation
        EvalPoint sigma;
        sigma.values = {a[3], a[2], a[1]};
        sigma.admissible = a.admissible;
        const std::int64_t N = 5;
        CHECK(lhs_brute(sigma, N) == -lhs_brute(a, N));
        CHECK(rhs_closed(sigma, N) == -rhs_closed(a, N));

        // 3-cycle: even
        EvalPoint rho;
        rho.values = {a[2], a[3], a[1]};
        rho.admissible = a.admissible;
        CHECK(lhs_brute(rho, N) == lhs_brute(a, N));
        CHECK(rhs_closed(rho, N) == rhs_closed(a, N));
    }
}

TEST_CASE("gamma is evaluated exactly 2^n times") {
    for (int n = 1; n <= 5; ++n) {
        EvalPoint a = gauss_point(n, 11 + std::uint64_t(n));
        RhsStats stats;
        (void)rhs_closed(a, n + 2, &stats);
        CHECK(stats.gamma_evals == (1ULL << n));
    }
}

TEST_CASE("subset enumeration order does not change the sum") {
    SplitMix64 g(109);
    for (int t = 0; t < 5; ++t) {
        const int n = 4;
        EvalPoint a = gf_point(n, g.next());
        const std::int64_t N = 1'000'000;
        std::vector<std::uint64_t> order(1ULL << n);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[g.below(i)]);
        CHECK(rhs_closed(a, N) == rhs_closed_ordered(a, N, order));
    }
    EvalPoint a = gf_point(3, 1);
    CHECK_THROWS_AS((void)rhs_closed_ordered(a, 5, {0, 1, 2}), DimensionMismatch);
}

TEST_CASE("reduced sum check") {
    EvalPoint a23 = make_eval_point({ExactScalar::integer(2), ExactScalar::integer(3)});
    CHECK(reduced_sum_check(a23, 3));
    CHECK(reduced_sum_check(a23, 1));   // boundary: both sides empty/zero
    CHECK(reduced_sum_check(a23, 2));   // boundary N = n

    SplitMix64 g(113);
    for (int t = 0; t < 3; ++t) {
        EvalPoint a3 = gauss_point(3, g.next());
        CHECK(reduced_sum_check(a3, 5));
    }
    CHECK(reduced_sum_check(gf_point(3, 7), 12));
    EvalPoint a1 = make_eval_point({ExactScalar::integer(2)});
    CHECK_THROWS_AS((void)reduced_sum_check(a1, 3), PreconditionViolated);
}

TEST_CASE("zerosum") {
    // n = 2 holds for any distinct pair, even on a closed-form pole
    EvalPoint pole;
    pole.values = {ExactScalar::integer(2), ExactScalar::rational(1, 2)};
    pole.admissible = false;
    CHECK(zerosum_check(pole));

    EvalPoint a235 = make_eval_point(
        {ExactScalar::integer(2), ExactScalar::integer(3), ExactScalar::integer(5)});
    CHECK(zerosum_check(a235));

    SplitMix64 g(127);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 3; ++t) CHECK(zerosum_check(gauss_point(n, g.next())));
    CHECK(zerosum_check(gf_point(5, 1)));
}

TEST_CASE("n2 closed shape matches both sides") {
    SplitMix64 g(131);
    for (int t = 0; t < 10; ++t) {
        EvalPoint a = gauss_point(2, g.next());
        const ExactScalar one = a.scalar_one();
        const ExactScalar prefactor = a[1] / (a[1] - one) * (a[2] / (a[2] - one));
        for (std::int64_t N = 2; N <= 6; ++N) {
            CHECK(prefactor * n2_closed_shape(a, N) == rhs_closed(a, N));
            CHECK(prefactor * n2_closed_shape(a, N) == lhs_brute(a, N));
        }
    }
}

TEST_CASE("run_identity reports") {
    EvalPoint a = gauss_point(2, 17);
    IdentityReport rep = run_identity(a, 4, 17);
    CHECK(rep.equal);
    CHECK(rep.n == 2);
    CHECK(rep.N == 4);
    CHECK(rep.lhs == rep.rhs);
    CHECK(rep.lhs_ns >= 0);
}

TEST_SUITE_END();
