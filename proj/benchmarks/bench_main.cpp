#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "tracekit/bounds.hpp"
#include "tracekit/mellin.hpp"
#include "tracekit/sums.hpp"
#include "tracekit/tracezoo.hpp"

using namespace tracekit;

namespace {

FunctionTable random_unit_table(std::uint64_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<cplx> v(m);
    for (auto& z : v) z = std::polar(1.0, angle(rng));
    return FunctionTable(Modulus(m), std::move(v));
}

void BM_dft_fast(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    FunctionTable phi = random_unit_table(m, 1);
    for (auto _ : state) benchmark::DoNotOptimize(dft_fast(phi));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(m));
}
BENCHMARK(BM_dft_fast)->Arg(1009)->Arg(4096)->Arg(9973)->Arg(99991)->Arg(1000003)
    ->Complexity(benchmark::oNLogN)->Unit(benchmark::kMillisecond);

void BM_dft_naive(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    FunctionTable phi = random_unit_table(m, 1);
    for (auto _ : state) benchmark::DoNotOptimize(dft_naive(phi));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(m));
}
BENCHMARK(BM_dft_naive)->Arg(1009)->Arg(4096)->Arg(9973)
    ->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);

void BM_birch_all(benchmark::State& state) {
    const Modulus p(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(birch_all(p));
}
BENCHMARK(BM_birch_all)->Arg(9973)->Arg(99991)->Arg(1000003)
    ->Unit(benchmark::kMillisecond);

void BM_kloosterman_all(benchmark::State& state) {
    const Modulus p(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kloosterman_all(1, p));
}
BENCHMARK(BM_kloosterman_all)->Arg(9973)->Arg(99991)->Unit(benchmark::kMillisecond);

void BM_delta(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    SpectralPair pair = make_spectral_pair(birch_all(Modulus(m)));
    PartialSumTable table(pair);
    for (auto _ : state) benchmark::DoNotOptimize(delta(table, m / 4));
}
BENCHMARK(BM_delta)->Arg(9973)->Arg(99991)->Unit(benchmark::kMicrosecond);

void BM_mellin_all(benchmark::State& state) {
    const Modulus p(static_cast<std::uint64_t>(state.range(0)));
    const DlogTable dlog = build_dlog(p, primitive_root(p));
    const FunctionTable tau = kloosterman_all(1, p);
    for (auto _ : state) benchmark::DoNotOptimize(mellin_all(tau, dlog));
}
BENCHMARK(BM_mellin_all)->Arg(9973)->Arg(99991)->Unit(benchmark::kMillisecond);

void BM_check_pv_kernel(benchmark::State& state) {
    const Modulus m(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_pv_kernel(m, 1, m.value() / 3));
}
BENCHMARK(BM_check_pv_kernel)->Arg(9973)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
