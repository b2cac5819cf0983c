#include "fixtures.hpp"

#include "sparsemult/dual_space.hpp"
#include "sparsemult/envelopes.hpp"
#include "sparsemult/multiplicity.hpp"

#include <benchmark/benchmark.h>

using namespace sparsemult;

namespace {

void BM_MixedVolume(benchmark::State& state)
{
    const auto a = fixtures::axes_example().with_origin();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mixed_volume(a.sets()));
    }
}
BENCHMARK(BM_MixedVolume)->Unit(benchmark::kMillisecond);

void BM_StableMixedVolume(benchmark::State& state)
{
    const auto a = fixtures::census_example();
    for (auto _ : state) {
        benchmark::DoNotOptimize(stable_mixed_volume(a.sets()));
    }
}
BENCHMARK(BM_StableMixedVolume)->Unit(benchmark::kMillisecond);

void BM_Mult0Augmented(benchmark::State& state)
{
    const auto a = fixtures::general_example();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mult0(a));
    }
}
BENCHMARK(BM_Mult0Augmented)->Unit(benchmark::kMillisecond);

void BM_MixedIntegralPlanar(benchmark::State& state)
{
    const auto a = fixtures::planar_example();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mult0_mixed_integral(a));
    }
}
BENCHMARK(BM_MixedIntegralPlanar)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state)
{
    const auto a = fixtures::census_example();
    for (auto _ : state) {
        benchmark::DoNotOptimize(census(a));
    }
}
BENCHMARK(BM_Census)->Unit(benchmark::kSecond)->Iterations(1);

// Nullity of S_k for a random instance on the three-variable family, by order k.
void BM_Nullity(benchmark::State& state)
{
    const auto g = random_system(fixtures::axes_example(), 1);
    const auto m = build_S_k(g, RationalPoint(3, Rational(0)), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nullity(m));
    }
    state.counters["rows"] = static_cast<double>(m.row_count());
    state.counters["cols"] = static_cast<double>(m.column_count());
}
BENCHMARK(BM_Nullity)->DenseRange(2, 12, 2)->Unit(benchmark::kMillisecond);

void BM_OracleRandomFamily(benchmark::State& state)
{
    const auto a = fixtures::random_h1h2_family(static_cast<std::uint64_t>(state.range(0)), 2, 5, 5);
    const auto m = mult0(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_origin_multiplicity(a, m, 1, default_bound, kmax_for(m)));
    }
    state.counters["mult0"] = m.get_d();
}
BENCHMARK(BM_OracleRandomFamily)->Arg(0)->Arg(8)->Arg(46)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
