#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "evanescent/special_fn.hpp"

using evanescent::cplx;

namespace {

std::vector<cplx> points(double r, bool upper) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-r, r);
  std::vector<cplx> z(1024);
  for (auto& p : z) {
    p = {u(rng), u(rng)};
    if (upper) p.imag(std::abs(p.imag()) + 1e-3);
  }
  return z;
}

void BM_FaddeevaUpper(benchmark::State& state) {
  const auto z = points(static_cast<double>(state.range(0)), true);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(evanescent::faddeeva_w(z[i++ & 1023]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FaddeevaUpper)->Arg(2)->Arg(6)->Arg(20);

// lower half plane goes through the reflection identity
void BM_FaddeevaLower(benchmark::State& state) {
  auto z = points(5.0, true);
  for (auto& p : z) p = std::conj(p);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(evanescent::faddeeva_w(z[i++ & 1023]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FaddeevaLower);

void BM_ExpIntegralE1(benchmark::State& state) {
  auto z = points(static_cast<double>(state.range(0)), true);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(evanescent::exp_integral_e1(z[i++ & 1023]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExpIntegralE1)->Arg(3)->Arg(30);

}  // namespace
