#include "sseq/gen.hpp"

#include <benchmark/benchmark.h>

using namespace sseq;

namespace {

RatMatrix input(std::size_t n)
{
    gen::Rng rng(n);
    // rank deficient so that the elimination has to carry zero rows along
    RatMatrix a = gen::random_matrix(rng, n, n / 2 + 1, 5, 0.7);
    RatMatrix b = gen::random_matrix(rng, n / 2 + 1, n, 5, 0.7);
    return a * b;
}

void BM_echelon_serial(benchmark::State& state)
{
    const RatMatrix m = input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(echelon_serial(m));
}

void BM_echelon_parallel(benchmark::State& state)
{
    const RatMatrix m = input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(echelon(m));
}

void BM_spectral_sequence(benchmark::State& state)
{
    const FilteredComplex fc = gen::random_filtered_complex(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_ss(fc));
}

}  // namespace

BENCHMARK(BM_echelon_serial)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_echelon_parallel)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_spectral_sequence)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
