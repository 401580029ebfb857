#include <benchmark/benchmark.h>

#include "domineering/alpha.hpp"
#include "domineering/transfer.hpp"

using namespace domineering;

static void BM_BuildRightLevel(benchmark::State& state) {
  auto q = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_right_level(q));
  }
}
BENCHMARK(BM_BuildRightLevel)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_BuildMaximalLevel(benchmark::State& state) {
  auto q = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_maximal_level(q));
  }
}
BENCHMARK(BM_BuildMaximalLevel)->Arg(3)->Arg(4)->Arg(5);

static void BM_RightEndPoly(benchmark::State& state) {
  auto m = static_cast<unsigned>(state.range(0));
  auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(right_end_poly(m, n));
  }
}
BENCHMARK(BM_RightEndPoly)->Args({4, 4})->Args({6, 6})->Args({2, 10});

static void BM_RightEndPolyCapped(benchmark::State& state) {
  TransferOptions options;
  options.cap = DegreeCap::bounded(13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(right_end_poly(8, 8, options));
  }
}
BENCHMARK(BM_RightEndPolyCapped);

static void BM_MaximalPoly(benchmark::State& state) {
  auto m = static_cast<unsigned>(state.range(0));
  auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_poly(m, n));
  }
}
BENCHMARK(BM_MaximalPoly)->Args({4, 4})->Args({5, 5})->Args({4, 6});

static void BM_OneRowScalarPath(benchmark::State& state) {
  auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(right_end_poly(1, n));
  }
}
BENCHMARK(BM_OneRowScalarPath)->Arg(16)->Arg(64);

static void BM_ComputeAlpha(benchmark::State& state) {
  auto m = static_cast<unsigned>(state.range(0));
  auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_alpha(m, n));
  }
}
BENCHMARK(BM_ComputeAlpha)->Args({6, 6})->Args({8, 8})->Args({2, 11});

static void BM_BuildTable(benchmark::State& state) {
  auto size = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table(size, size));
  }
}
BENCHMARK(BM_BuildTable)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
