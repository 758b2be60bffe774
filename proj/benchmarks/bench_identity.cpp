#include <benchmark/benchmark.h>

#include "detsum/identity.hpp"
#include "detsum/rmatrix.hpp"
#include "detsum/scalar.hpp"

namespace {

constexpr std::uint64_t kMersenne61 = 2305843009213693951ULL;

detsum::EvalPoint gf_point(int n) {
    detsum::SampleOptions so;
    so.modulus = kMersenne61;
    return detsum::sample_admissible(n, detsum::Domain::prime_field, 42, so);
}

void BM_RhsClosed_GF(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::int64_t N = state.range(1);
    const detsum::EvalPoint a = gf_point(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(detsum::rhs_closed(a, N));
}
BENCHMARK(BM_RhsClosed_GF)
    ->Args({2, 300})
    ->Args({3, 300})
    ->Args({3, 1'000'000})
    ->Args({5, 1'000'000})
    ->Args({8, 1'000'000});

void BM_LhsBrute_GF(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::int64_t N = state.range(1);
    const detsum::EvalPoint a = gf_point(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(detsum::lhs_brute(a, N));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LhsBrute_GF)
    ->Args({2, 300})
    ->Args({3, 100})
    ->Args({3, 200})
    ->Args({3, 300})
    ->Unit(benchmark::kMillisecond);

void BM_LhsBrute_Gaussian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::int64_t N = state.range(1);
    const detsum::EvalPoint a =
        detsum::sample_admissible(n, detsum::Domain::gaussian_rational, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(detsum::lhs_brute(a, N));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LhsBrute_Gaussian)->Args({3, 9})->Args({4, 9})->Args({5, 9});

void BM_ZerosumCheck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const detsum::EvalPoint a =
        detsum::sample_admissible(n, detsum::Domain::gaussian_rational, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(detsum::zerosum_check(a));
}
BENCHMARK(BM_ZerosumCheck)->Arg(4)->Arg(5)->Arg(6);

void BM_RMatrixBuild(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int bound = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            detsum::r_matrix(k, bound, long(k) * bound / 2));
}
BENCHMARK(BM_RMatrixBuild)->Args({3, 4})->Args({4, 5})->Args({4, 8});

} // namespace

BENCHMARK_MAIN();
