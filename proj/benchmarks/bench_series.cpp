#include <benchmark/benchmark.h>

#include "toricq/fan_library.hpp"
#include "toricq/givental.hpp"
#include "toricq/mirror.hpp"

namespace {

using namespace toricq;

IFunctionRequest request(const Fan& fan, std::int64_t bound, unsigned t_trunc, unsigned threads) {
  IFunctionRequest req;
  req.variety = ToricVariety::make(fan);
  req.polarization = default_polarization(req.variety->fan, req.variety->weights);
  req.degree_bound = bound;
  req.t_trunc = t_trunc;
  req.z_floor = default_z_floor(*req.variety, bound, t_trunc);
  req.threads = threads;
  return req;
}

void BM_SmallIProjectiveSpace(benchmark::State& state) {
  const auto req = request(projective_space_fan(static_cast<std::size_t>(state.range(0))), 3, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(small_I(req));
}
BENCHMARK(BM_SmallIProjectiveSpace)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SmallIF2Threads(benchmark::State& state) {
  const auto req = request(hirzebruch_fan(2), 5, 2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(small_I(req));
}
BENCHMARK(BM_SmallIF2Threads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MirrorRoundTripF2(benchmark::State& state) {
  const auto req = request(hirzebruch_fan(2), state.range(0), static_cast<unsigned>(state.range(0)), 1);
  const auto tau = mirror_map(small_I(req));
  for (auto _ : state) benchmark::DoNotOptimize(compose(tau, invert_mirror_map(tau)));
}
BENCHMARK(BM_MirrorRoundTripF2)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ZLaurentMul(benchmark::State& state) {
  const auto v = ToricVariety::make(projective_space_fan(static_cast<std::size_t>(state.range(0))));
  const Truncation trunc{-20, 2, 2};
  const auto h = v->ring->ray_class(0);
  ZLaurentSeries a = ZLaurentSeries::one(v->ring, trunc);
  for (std::int64_t j = 1; j <= 4; ++j) a = zl_mul(a, ZLaurentSeries::linear_factor(v->ring, trunc, h, j));
  const auto b = zl_invert_unit(a);
  for (auto _ : state) benchmark::DoNotOptimize(zl_mul(a, b));
}
BENCHMARK(BM_ZLaurentMul)->DenseRange(1, 4);

}  // namespace
