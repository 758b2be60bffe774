#include <doctest.h>

#include <algorithm>
#include <functional>

#include "detsum/delta.hpp"
#include "detsum/matrix.hpp"
#include "detsum/prng.hpp"
#include "detsum/scalar.hpp"
#include "detsum/subset.hpp"

using namespace detsum;

namespace {

// Test-only oracle: naive cofactor expansion along the first row.
ExactScalar cofactor_det(const Matrix& m) {
    REQUIRE(m.rows() == m.cols());
    const int n = m.rows();
    if (n == 0) return ExactScalar::integer(1);
    if (n == 1) return m.at(0, 0);
    ExactScalar sum = m.at(0, 0).zero();
    for (int c = 0; c < n; ++c) {
        Matrix minor(n - 1, n - 1, m.at(0, 0).zero());
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                minor.at(r - 1, cc++) = m.at(r, c2);
            }
        }
        ExactScalar term = m.at(0, c) * cofactor_det(minor);
        sum += c % 2 ? -term : term;
    }
    return sum;
}

Matrix random_matrix(int n, SplitMix64& g, bool gaussian) {
    const ExactScalar zero =
        gaussian ? ExactScalar::integer(0) : ExactScalar::residue(0, 101);
    Matrix m(n, n, zero);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, c) = gaussian
                             ? ExactScalar::rational(long(g.below(19)) - 9,
                                                     long(g.below(6)) + 1)
                             : ExactScalar::residue(g.below(101), 101);
    return m;
}

} // namespace

TEST_SUITE_BEGIN("detcore");

TEST_CASE("determinant basics") {
    Matrix m(2, 2, ExactScalar::integer(0));
    m.at(0, 0) = ExactScalar::integer(1);
    m.at(0, 1) = ExactScalar::integer(2);
    m.at(1, 0) = ExactScalar::integer(3);
    m.at(1, 1) = ExactScalar::integer(4);
    CHECK(determinant(m) == ExactScalar::integer(-2));

    Matrix eq(2, 2, ExactScalar::integer(5));   // two equal rows
    CHECK(determinant(eq).is_zero());

    // Vandermonde on (2,3,5): (3-2)(5-2)(5-3) = 6
    Matrix v(3, 3, ExactScalar::integer(0));
    const long vals[3] = {2, 3, 5};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            v.at(r, c) = pow(ExactScalar::integer(vals[r]), std::uint64_t(c));
    CHECK(determinant(v) == ExactScalar::integer(6));

    CHECK(determinant(Matrix(0, 0, ExactScalar::integer(0))) ==
          ExactScalar::integer(1));
    CHECK_THROWS_AS(determinant(Matrix(2, 3, ExactScalar::integer(0))), NotSquare);
}

TEST_CASE("determinant agrees with cofactor oracle up to 5x5") {
    SplitMix64 g(31);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 8; ++t) {
            Matrix mq = random_matrix(n, g, true);
            CHECK(determinant(mq) == cofactor_det(mq));
            Matrix mp = random_matrix(n, g, false);
            CHECK(determinant(mp) == cofactor_det(mp));
        }
}

TEST_CASE("row swap negates, row scaling scales") {
    SplitMix64 g(37);
    for (int t = 0; t < 10; ++t) {
        Matrix m = random_matrix(4, g, true);
        Matrix swapped = m;
        for (int c = 0; c < 4; ++c) std::swap(swapped.at(1, c), swapped.at(3, c));
        CHECK(determinant(swapped) == -determinant(m));

        const ExactScalar scale = ExactScalar::rational(long(g.below(9)) + 2, 3);
        Matrix scaled = m;
        for (int c = 0; c < 4; ++c) scaled.at(2, c) *= scale;
        CHECK(determinant(scaled) == scale * determinant(m));
    }
}

TEST_CASE("vandermonde_delta fixed values") {
    EvalPoint a235 = make_eval_point(
        {ExactScalar::integer(2), ExactScalar::integer(3), ExactScalar::integer(5)});
    CHECK(vandermonde_delta(SubsetMask::empty(3), a235).is_one());
    CHECK(vandermonde_delta(SubsetMask::of(3, {2}), a235).is_one());
    CHECK(vandermonde_delta(SubsetMask::of(3, {1, 2}), a235) == ExactScalar::integer(1));
    CHECK(vandermonde_delta(SubsetMask::full(3), a235) == ExactScalar::integer(6));

    EvalPoint wide = sample_admissible(5, Domain::gaussian_rational, 3);
    CHECK(vandermonde_delta(SubsetMask::of(5, {5}), wide).is_one());
}

TEST_CASE("power_delta matches vandermonde on staircase exponents") {
    SplitMix64 g(41);
    for (int t = 0; t < 4; ++t) {
        EvalPoint a = sample_admissible(6, Domain::gaussian_rational, g.next());
        for_each_subset(6, [&](const SubsetMask& J) {
            ExponentSeq stairs(J.size());
            for (int i = 0; i < J.size(); ++i) stairs[i] = i;
            CHECK(power_delta(stairs, J, a) == vandermonde_delta(J, a));
        });
    }
}

TEST_CASE("power_delta fixed values and antisymmetry") {
    EvalPoint a23 = make_eval_point({ExactScalar::integer(2), ExactScalar::integer(3)});
    const SubsetMask both = SubsetMask::full(2);
    CHECK(power_delta({2, 2}, both, a23).is_zero());
    CHECK(power_delta({0, 2}, both, a23) == ExactScalar::integer(5));   // 9 - 4
    CHECK(power_delta({2, 0}, both, a23) == ExactScalar::integer(-5));

    EvalPoint a = sample_admissible(3, Domain::gaussian_rational, 8);
    const SubsetMask full = SubsetMask::full(3);
    CHECK(power_delta({1, 4, 6}, full, a) == -power_delta({4, 1, 6}, full, a));
    CHECK_THROWS_AS(power_delta({1, 2}, full, a), DimensionMismatch);
}

TEST_CASE("laplace split: small fixed cases") {
    EvalPoint a = sample_admissible(2, Domain::gaussian_rational, 77);
    CHECK(laplace_split_check({0, 1}, 1, a));
    CHECK(laplace_split_check({0, 1}, 0, a));
    CHECK(laplace_split_check({0, 1}, 2, a));

    EvalPoint b = sample_admissible(4, Domain::gaussian_rational, 78);
    CHECK(laplace_split_check({0, 1, 2, 3}, 2, b));

    SampleOptions so;
    so.modulus = 2305843009213693951ULL;
    EvalPoint c = sample_admissible(4, Domain::prime_field, 79, so);
    CHECK(laplace_split_check({0, 2, 3, 6}, 2, c));
}

TEST_CASE("laplace split: full grid n <= 5, exponents <= 7") {
    SplitMix64 g(43);
    for (int n = 1; n <= 5; ++n) {
        for (int t = 0; t < 5; ++t) {
            EvalPoint a = sample_admissible(n, Domain::gaussian_rational, g.next());
            // strictly increasing exponent sequences with max <= 7
            std::vector<int> idx(n);
            std::function<void(int, int)> rec = [&](int pos, int start) {
                if (pos == n) {
                    ExponentSeq m(idx.begin(), idx.end());
                    for (int k = 0; k <= n; ++k) CHECK(laplace_split_check(m, k, a));
                    return;
                }
                for (int v = start; v <= 7; ++v) {
                    idx[pos] = v;
                    rec(pos + 1, v + 1);
                }
            };
            rec(0, 0);
        }
    }
}

TEST_CASE("matrix text form") {
    Matrix m(2, 2, ExactScalar::integer(0));
    m.at(0, 0) = ExactScalar::rational(1, 2);
    m.at(1, 1) = ExactScalar::integer(-3);
    CHECK(m.str() == "1/2\t0\n0\t-3\n");
}

TEST_SUITE_END();
