#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "domineering/bipoly.hpp"

using namespace domineering;

namespace {

BivariatePoly random_poly(unsigned terms, unsigned max_exp, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> exponent(0, max_exp);
  std::uniform_int_distribution<long> coefficient(1, 999);
  std::vector<Term> out;
  out.reserve(terms);
  for (unsigned i = 0; i < terms; ++i) {
    out.push_back({exponent(rng), exponent(rng), mpz_class(coefficient(rng))});
  }
  return BivariatePoly::from_terms(std::move(out));
}

PolyMatrix random_matrix(unsigned dim, std::mt19937& rng) {
  PolyMatrix mat(dim);
  std::uniform_int_distribution<unsigned> col(1, dim);
  for (unsigned i = 1; i <= dim; ++i) {
    for (unsigned k = 0; k < 3; ++k) {
      mat.set_entry(i, col(rng), random_poly(2, 4, rng));
    }
  }
  return mat;
}

}  // namespace

static void BM_PolyMul(benchmark::State& state) {
  std::mt19937 rng(7);
  auto terms = static_cast<unsigned>(state.range(0));
  auto lhs = random_poly(terms, 24, rng);
  auto rhs = random_poly(terms, 24, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_mul(lhs, rhs));
  }
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64)->Arg(256);

static void BM_PolyMulCapped(benchmark::State& state) {
  std::mt19937 rng(7);
  auto terms = static_cast<unsigned>(state.range(0));
  auto lhs = random_poly(terms, 24, rng);
  auto rhs = random_poly(terms, 24, rng);
  auto cap = DegreeCap::bounded(16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_mul(lhs, rhs, cap));
  }
}
BENCHMARK(BM_PolyMulCapped)->Arg(64)->Arg(256);

static void BM_PolyAdd(benchmark::State& state) {
  std::mt19937 rng(11);
  auto terms = static_cast<unsigned>(state.range(0));
  auto lhs = random_poly(terms, 40, rng);
  auto rhs = random_poly(terms, 40, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_add(lhs, rhs));
  }
}
BENCHMARK(BM_PolyAdd)->Arg(64)->Arg(1024);

static void BM_MatMul(benchmark::State& state) {
  std::mt19937 rng(13);
  auto dim = static_cast<unsigned>(state.range(0));
  auto lhs = random_matrix(dim, rng);
  auto rhs = random_matrix(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_mul(lhs, rhs, DegreeCap::unbounded()));
  }
}
BENCHMARK(BM_MatMul)->Arg(16)->Arg(64);

static void BM_MatPowSquareAndMultiply(benchmark::State& state) {
  std::mt19937 rng(17);
  auto base = random_matrix(16, rng);
  auto cap = DegreeCap::bounded(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mat_pow(base, 8, cap, PowStrategy::SquareAndMultiply));
  }
}
BENCHMARK(BM_MatPowSquareAndMultiply);

static void BM_MatPowRepeatedMultiply(benchmark::State& state) {
  std::mt19937 rng(17);
  auto base = random_matrix(16, rng);
  auto cap = DegreeCap::bounded(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mat_pow(base, 8, cap, PowStrategy::RepeatedMultiply));
  }
}
BENCHMARK(BM_MatPowRepeatedMultiply);

static void BM_MatApply(benchmark::State& state) {
  std::mt19937 rng(19);
  auto dim = static_cast<unsigned>(state.range(0));
  auto mat = random_matrix(dim, rng);
  std::vector<BivariatePoly> vec;
  for (unsigned i = 0; i < dim; ++i) vec.push_back(random_poly(4, 8, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_apply(mat, vec, DegreeCap::unbounded()));
  }
}
BENCHMARK(BM_MatApply)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
