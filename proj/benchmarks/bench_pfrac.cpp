#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "pfrac/alphafrac.hpp"
#include "pfrac/jacobi.hpp"
#include "pfrac/symmetry.hpp"

using namespace pfrac;

static void BM_ExpandByPeriod(benchmark::State& state) {
  testing::Gen gen(1);
  const Expansion e = gen.expansion(static_cast<int>(state.range(0)));
  const AlphaTriple t = expansion_to_triple(e).triple;
  for (auto _ : state) benchmark::DoNotOptimize(expand(t, e.alpha()));
}
BENCHMARK(BM_ExpandByPeriod)->DenseRange(1, 9, 2);

static void BM_TripleByPeriod(benchmark::State& state) {
  testing::Gen gen(2);
  const Expansion e = gen.expansion(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expansion_to_triple(e));
}
BENCHMARK(BM_TripleByPeriod)->DenseRange(1, 9, 2);

static void BM_Orbit(benchmark::State& state) {
  testing::Gen gen(3);
  const Expansion e = gen.expansion(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orbit(e, false));
}
BENCHMARK(BM_Orbit)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_JacobiFromDivisor(benchmark::State& state) {
  testing::Gen gen(4);
  const JacobiTriple j = gen.jacobi(static_cast<int>(state.range(0)));
  const Divisor d = divisor_from_jacobi(j);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_from_divisor(d, j.R()));
}
BENCHMARK(BM_JacobiFromDivisor)->DenseRange(1, 4);
BENCHMARK_MAIN();
