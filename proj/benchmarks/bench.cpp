#include <benchmark/benchmark.h>

#include "gw/detlab.hpp"
#include "gw/virasoro.hpp"

using namespace gw;

namespace {

void bm_series_mul(benchmark::State& state) {
    const long order = state.range(0);
    Series a = series_pow(Series::linear(order, rat(1, 3)), rat(-5, 2));
    Series b = series_pow(Series::linear(order, rat(2, 7)), Rat(4));
    for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(bm_series_mul)->Arg(16)->Arg(64)->Arg(256);

void bm_det(benchmark::State& state) {
    const long n = state.range(0);
    Matrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = rat((i * 7 + j * 3) % 11 - 5, (i + j) % 4 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(bm_det)->Arg(4)->Arg(8)->Arg(12);

void bm_genus0_points(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) {
        Genus0Engine eng(2); // cold engine per iteration: measures the recursion
        benchmark::DoNotOptimize(eng.descendant(d, std::vector<Insertion>(static_cast<size_t>(3 * d - 1), {0, 2})));
    }
}
BENCHMARK(bm_genus0_points)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_family_solve(benchmark::State& state) {
    for (auto _ : state) {
        Engine eng;
        Context ctx{2, 1, {}};
        benchmark::DoNotOptimize(solve_family(eng, ctx));
    }
}
BENCHMARK(bm_family_solve)->Unit(benchmark::kMillisecond);

void bm_wtilde_det(benchmark::State& state) {
    const long n = state.range(0);
    Context ctx{2, 1, {}};
    std::vector<long> rows;
    for (long i = 0; i < n; ++i) rows.push_back(delta(ctx) + i);
    for (auto _ : state) benchmark::DoNotOptimize(wtilde_det(ctx, rows));
}
BENCHMARK(bm_wtilde_det)->Arg(3)->Arg(5);

} // namespace

BENCHMARK_MAIN();
