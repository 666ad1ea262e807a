#include <benchmark/benchmark.h>

#include "gop/diffsystems/diff_system.hpp"
#include "gop/orealg/catalog.hpp"
#include "gop/orealg/closure.hpp"

namespace {

void BM_IteratedLog(benchmark::State& state) {
  const gop::DiffSystem g = gop::companion_matrix(gop::log_operator());
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gop::iterated(g, s));
}
BENCHMARK(BM_IteratedLog)->Arg(20)->Arg(40)->Arg(80);

void BM_ClearedHypergeometric(benchmark::State& state) {
  using gop::BigRational;
  const gop::DiffSystem g =
      gop::companion_matrix(gop::hypergeometric_operator(BigRational(1, 3), BigRational(2, 11), BigRational(1, 6)));
  const gop::Polynomial t = gop::denominator_lcm(g);
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gop::cleared_iterates(g, t, s));
}
BENCHMARK(BM_ClearedHypergeometric)->Arg(10)->Arg(20)->Arg(40);

}  // namespace
