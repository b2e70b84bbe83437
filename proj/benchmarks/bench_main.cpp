#include <knotarc/bracket.hpp>
#include <knotarc/grid.hpp>
#include <knotarc/laurent.hpp>
#include <knotarc/skein.hpp>

#include <benchmark/benchmark.h>

using namespace knotarc;

static void BM_LaurentMul(benchmark::State& state) {
  Laurent2 x = Laurent2::delta();
  for (int i = 1; i < state.range(0); ++i) x = mul(x, add(Laurent2::delta(), Laurent2::z()));
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, x));
  state.SetLabel(std::to_string(x.size()) + " terms");
}
BENCHMARK(BM_LaurentMul)->Arg(4)->Arg(8)->Arg(16);

static void BM_SkeinColdCache(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SkeinCache cache;
    benchmark::DoNotOptimize(lambda_three(-3, 4, r, cache));
  }
}
BENCHMARK(BM_SkeinColdCache)->DenseRange(5, 21, 4);

static void BM_SkeinFamilySweep(benchmark::State& state) {
  for (auto _ : state) {
    SkeinCache cache;
    for (int p = 2; p <= 9; ++p)
      for (int q = 2; q <= 9; ++q)
        for (int r = q; r <= 9; ++r)
          if (is_family(p, q, r)) benchmark::DoNotOptimize(kauffman_F(FamilySpec(p, q, r).pretzel(), cache));
  }
}
BENCHMARK(BM_SkeinFamilySweep);

static void BM_StateSum(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const PlanarDiagram d = to_planar(construct_minus2(3, r));
  StateSumOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bracket(d, options));
  state.SetLabel(std::to_string(d.crossings.size()) + " crossings");
}
BENCHMARK(BM_StateSum)->Args({3, 1})->Args({5, 1})->Args({7, 1})->Args({7, 0})->Unit(benchmark::kMillisecond);

static void BM_ConstructFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construct_family(FamilySpec(5, 6, 9)));
}
BENCHMARK(BM_ConstructFamily);

BENCHMARK_MAIN();
