#include <benchmark/benchmark.h>

#include "toricq/fan_library.hpp"
#include "toricq/variety.hpp"

namespace {

using namespace toricq;

void BM_RingProjectiveSpace(benchmark::State& state) {
  const Fan fan = projective_space_fan(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ToricVariety::make(fan));
}
BENCHMARK(BM_RingProjectiveSpace)->DenseRange(1, 5);

void BM_RingProductOfProjectiveSpaces(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Fan fan = product_fan(projective_space_fan(n), projective_space_fan(n));
  for (auto _ : state) benchmark::DoNotOptimize(ToricVariety::make(fan));
}
BENCHMARK(BM_RingProductOfProjectiveSpaces)->DenseRange(1, 2);

void BM_RingHirzebruch(benchmark::State& state) {
  const Fan fan = hirzebruch_fan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ToricVariety::make(fan));
}
BENCHMARK(BM_RingHirzebruch)->Arg(2)->Arg(5);

}  // namespace
