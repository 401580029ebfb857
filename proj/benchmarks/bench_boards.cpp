#include <benchmark/benchmark.h>

#include "domineering/boards.hpp"

using namespace domineering;

static void BM_EnumerateEndPolys(benchmark::State& state) {
  auto m = static_cast<unsigned>(state.range(0));
  auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_end_polys(m, n));
  }
}
BENCHMARK(BM_EnumerateEndPolys)->Args({2, 6})->Args({4, 4})->Args({2, 10})->Args({4, 5});

static void BM_OracleAlpha(benchmark::State& state) {
  auto m = static_cast<unsigned>(state.range(0));
  auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_alpha(m, n));
  }
}
BENCHMARK(BM_OracleAlpha)->Args({4, 4})->Args({4, 5});

static void BM_FindWitness(benchmark::State& state) {
  auto target = oracle_alpha(4, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_witness(target));
  }
}
BENCHMARK(BM_FindWitness);

static void BM_ValidateSequence(benchmark::State& state) {
  auto witness = find_witness(oracle_alpha(4, 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_sequence(witness.sequence, witness.position));
  }
}
BENCHMARK(BM_ValidateSequence);

static void BM_RenderParseAscii(benchmark::State& state) {
  auto witness = find_witness(oracle_alpha(4, 5));
  for (auto _ : state) {
    auto text = render_ascii(witness.position);
    benchmark::DoNotOptimize(parse_ascii(text));
  }
}
BENCHMARK(BM_RenderParseAscii);

BENCHMARK_MAIN();
