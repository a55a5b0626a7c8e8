#include <arh/heights.hpp>
#include <arh/periods.hpp>
#include <arh/plane_quad.hpp>
#include <arh/specfun.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

void BM_HurwitzDs(benchmark::State& state) {
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arh::hurwitz_zeta_ds(x));
    x = x < 0.95 ? x + 0.01 : 0.05;
  }
}
BENCHMARK(BM_HurwitzDs);

void BM_GammaAB(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arh::gamma_ab(0.1, 0.8));
}
BENCHMARK(BM_GammaAB);

void BM_HCan(benchmark::State& state) {
  const arh::WeightVector w{0.75, 0.8, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(arh::h_can_signed(w));
}
BENCHMARK(BM_HCan);

void BM_DfLogZ(benchmark::State& state) {
  const arh::PeriodConfig cfg{state.range(0), {5.0 / 6, 5.0 / 6, 5.0 / 6}};
  for (auto _ : state) benchmark::DoNotOptimize(arh::df_log_Z(cfg, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DfLogZ)->RangeMultiplier(10)->Range(10, 100000)->Complexity(benchmark::oN);

void BM_IntegratePlane(benchmark::State& state) {
  // |z|^-1 |z-1|^-1 (1+|z|^2)^-2 with three singular points
  const auto g = [](const arh::PlanePoint& p) {
    const double r0 = p.dist(0.0), r1 = p.dist(1.0);
    const double a = std::abs(p.z());
    return 1.0 / (r0 * r1 * (1 + a * a) * (1 + a * a));
  };
  arh::PlaneQuadOptions opt;
  opt.n_theta = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(arh::integrate_plane(g, {{0.0, -1.0}, {1.0, -1.0}}, -6.0, opt));
}
BENCHMARK(BM_IntegratePlane)->Arg(16)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
