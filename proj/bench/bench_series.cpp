// mul kernels on bivariate inputs, plus a product expansion

#include <benchmark/benchmark.h>

#include "rrs/bailey.hpp"
#include "rrs/qtools.hpp"

using namespace rrs;

namespace {

// a bivariate series with every row filled: 1 / ((x q; q)_n (q; q)_n)
Series dense(int N) {
  Series t = Series::one(N);
  div_poch(t, Monomial{1, 1, 1}, 1, N);
  div_poch(t, Monomial{1, 0, 1}, 1, N);
  return t;
}

void BM_mul(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  Series a = dense(N), b = dense(N);
  for (auto _ : st) benchmark::DoNotOptimize(mul(a, b));
}

void BM_mul_serial(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  Series a = dense(N), b = dense(N);
  for (auto _ : st) benchmark::DoNotOptimize(mul_serial(a, b));
}

void BM_product_expand(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(product_expand(triple_product(2, 5), N));
}

void BM_bl_insert(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(bl_insert(BLCase::W, {Family::S, 3, 1, 4}, N, XValue{}));
}

}  // namespace

BENCHMARK(BM_mul)->Arg(20)->Arg(40)->Arg(60);
BENCHMARK(BM_mul_serial)->Arg(20)->Arg(40)->Arg(60);
BENCHMARK(BM_product_expand)->Arg(300)->Arg(1000);
BENCHMARK(BM_bl_insert)->Arg(100)->Arg(200);
BENCHMARK_MAIN();
