#include <benchmark/benchmark.h>

#include "introots/cubic.hpp"
#include "introots/exactmath.hpp"
#include "introots/oracle.hpp"
#include "introots/polytext.hpp"
#include "introots/quadratic.hpp"

using namespace introots;

namespace {

void BM_ClassifyQuadratic(benchmark::State& state) {
    const QuadraticPoly q(6, -30, 36);
    for (auto _ : state) benchmark::DoNotOptimize(classify_quadratic(q));
}
BENCHMARK(BM_ClassifyQuadratic);

void BM_QuadraticBox(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        int hits = 0;
        for (int a = 1; a <= n; ++a)
            for (int b = -n; b <= n; ++b)
                for (int c = -n; c <= n; ++c) hits += classify_quadratic(QuadraticPoly(a, b, c)).all_integer;
        benchmark::DoNotOptimize(hits);
    }
    state.SetItemsProcessed(state.iterations() * n * (2 * n + 1) * (2 * n + 1));
}
BENCHMARK(BM_QuadraticBox)->Arg(10)->Arg(30);

void BM_DetectCubic(benchmark::State& state) {
    const CubicPoly p{0, -3, 2};
    for (auto _ : state) benchmark::DoNotOptimize(detect_cubic_pattern(p));
}
BENCHMARK(BM_DetectCubic);

void BM_ClassifyCubicChecked(benchmark::State& state) {
    const CubicPoly p{-6, 11, -6};
    for (auto _ : state) benchmark::DoNotOptimize(classify_cubic(p));
}
BENCHMARK(BM_ClassifyCubicChecked);

void BM_RationalRoots(benchmark::State& state) {
    // Coefficient growth: product over (x - i) for i in [1, n].
    const int n = static_cast<int>(state.range(0));
    std::vector<Integer> c{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] = next[j + 1] + c[j];
            next[j] = next[j] - Integer(i) * c[j];
        }
        c = next;
    }
    const PolyCoeffs p(c);
    for (auto _ : state) benchmark::DoNotOptimize(rational_roots(p));
}
BENCHMARK(BM_RationalRoots)->Arg(3)->Arg(6)->Arg(8);

void BM_Divisors(benchmark::State& state) {
    const Integer n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(divisors(n));
}
BENCHMARK(BM_Divisors)->Arg(720720)->Arg(1000000007);

void BM_ParseFormat(benchmark::State& state) {
    const std::string text = "-12x^3 + 7x^2 - x + 99";
    for (auto _ : state) benchmark::DoNotOptimize(format_poly(parse_poly(text)));
}
BENCHMARK(BM_ParseFormat);

}  // namespace

BENCHMARK_MAIN();
