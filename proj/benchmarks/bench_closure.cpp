#include <benchmark/benchmark.h>

#include "gop/orealg/catalog.hpp"
#include "gop/orealg/closure.hpp"
#include "gop/orealg/ore_operator.hpp"

namespace {

using gop::BigRational;

void BM_Lclm(benchmark::State& state) {
  const gop::OreOperator a = gop::hypergeometric_operator(BigRational(1, 3), BigRational(2, 11), BigRational(1, 6));
  const gop::OreOperator b = gop::hypergeometric_operator(BigRational(1, 2), BigRational(1, 2), BigRational(1));
  for (auto _ : state) benchmark::DoNotOptimize(gop::lclm(a, b));
}
BENCHMARK(BM_Lclm);

void BM_SymmetricProduct(benchmark::State& state) {
  const gop::OreOperator a = gop::hypergeometric_operator(BigRational(1, 3), BigRational(2, 11), BigRational(1, 6));
  const gop::OreOperator b = gop::log_operator();
  for (auto _ : state) benchmark::DoNotOptimize(gop::symmetric_product(a, b));
}
BENCHMARK(BM_SymmetricProduct);

}  // namespace
