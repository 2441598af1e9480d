#include <benchmark/benchmark.h>

#include "evanescent/band_source.hpp"
#include "evanescent/oracle.hpp"
#include "evanescent/sharp_source.hpp"
#include "evanescent/tf_analysis.hpp"

using namespace evanescent;

namespace {

void BM_PsiExact(benchmark::State& state) {
  const auto s = SourceParams::make(0.5);
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_exact(s, 7.0, t));
    t = t > 200.0 ? 0.5 : t + 0.37;
  }
}
BENCHMARK(BM_PsiExact);

void BM_PsiBand(benchmark::State& state) {
  const auto b = BandParams::make(0.5, 0.12);
  const double x = static_cast<double>(state.range(0));
  double t = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_band(b, x, t));
    t = t > 300.0 ? 1.0 : t + 7.3;
  }
}
BENCHMARK(BM_PsiBand)->Arg(13)->Arg(135)->Unit(benchmark::kMicrosecond);

// the brute-force reference, for scale
void BM_PsiBandOracle(benchmark::State& state) {
  const auto b = BandParams::make(0.5, 0.12);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::psi_band_oracle(b, 135.0, 150.0));
}
BENCHMARK(BM_PsiBandOracle)->Unit(benchmark::kMicrosecond);

void BM_StftExact(benchmark::State& state) {
  const auto s = SourceParams::make(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(stft_exact(s, 135.0, 52.36, 0.5, 300.0));
}
BENCHMARK(BM_StftExact)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
