#include <qh/fforacle.hpp>
#include <qh/kacpoly.hpp>
#include <qh/qvbetti.hpp>
#include <qh/series.hpp>

#include <benchmark/benchmark.h>

using namespace qh;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

const Quiver& jordan() {
    static const Quiver q = parse_quiver("vertices 1\nedge 0 0\n");
    return q;
}

const Quiver& d4tilde() {
    static const Quiver q = parse_quiver("vertices 5\nedge 1 0\nedge 2 0\nedge 3 0\nedge 4 0\n");
    return q;
}

void BM_MomentFiber(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_moment_fiber(jordan(), DimVector({2}), DimVector({1}), 7, mode(state)));
    label(state);
}

void BM_BruteKac(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_kac(d4tilde(), DimVector({2, 1, 1, 1, 1}), 2, mode(state)));
    label(state);
}

void BM_DenominatorSeries(benchmark::State& state) {
    const Quiver a2 = parse_quiver("vertices 2\nedge 0 1\n");
    for (auto _ : state)
        benchmark::DoNotOptimize(denominator_series(a2, GradingCap(DimVector({4, 4})), mode(state)));
    label(state);
}

void BM_SeriesInvert(benchmark::State& state) {
    const Quiver a2 = parse_quiver("vertices 2\nedge 0 1\n");
    const auto den = denominator_series(a2, GradingCap(DimVector({4, 4})));
    for (auto _ : state)
        benchmark::DoNotOptimize(invert(den, mode(state)));
    label(state);
}

void BM_PlethLog(benchmark::State& state) {
    const auto den = denominator_series(jordan(), GradingCap(DimVector({6})));
    for (auto _ : state)
        benchmark::DoNotOptimize(pleth_log(den, mode(state)));
    label(state);
}

void BM_KacPolynomials(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(kac_polynomials(d4tilde(), GradingCap(DimVector({2, 1, 1, 1, 1})), mode(state)));
    label(state);
}

} // namespace

BENCHMARK(BM_MomentFiber)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BruteKac)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DenominatorSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SeriesInvert)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PlethLog)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KacPolynomials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
