#include <benchmark/benchmark.h>

#include "gop/orealg/catalog.hpp"
#include "gop/orealg/closure.hpp"
#include "gop/sizecalc/galochkin.hpp"
#include "gop/sizecalc/padic_profile.hpp"

namespace {

void BM_GalochkinLog(benchmark::State& state) {
  const gop::DiffSystem g = gop::companion_matrix(gop::log_operator());
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gop::galochkin_sequence(g, s));
}
BENCHMARK(BM_GalochkinLog)->Arg(30)->Arg(60);

void BM_GalochkinPower(benchmark::State& state) {
  const gop::DiffSystem g = gop::companion_matrix(gop::power_operator(gop::BigRational(1, 7)));
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gop::galochkin_sequence(g, s));
}
BENCHMARK(BM_GalochkinPower)->Arg(30)->Arg(60);

void BM_PadicProfileHypergeometric(benchmark::State& state) {
  using gop::BigRational;
  const gop::DiffSystem g =
      gop::companion_matrix(gop::hypergeometric_operator(BigRational(1, 3), BigRational(2, 11), BigRational(1, 6)));
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gop::padic_size_estimate(g, s));
}
BENCHMARK(BM_PadicProfileHypergeometric)->Arg(10)->Arg(20);

}  // namespace
