#include <benchmark/benchmark.h>

#include "ucb/ellipticity.hpp"
#include "ucb/julia.hpp"
#include "ucb/normalization.hpp"
#include "ucb/render.hpp"

using namespace ucb;

namespace {

Exec exec_for(const benchmark::State& state) {
  const int workers = static_cast<int>(state.range(1));
  return workers == 0 ? Exec::serial() : Exec::parallel(workers);
}

// range(0): image side, range(1): worker count (0 = serial reference).
void BM_RenderParameterPlane(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RasterImage img = render_parameter_plane(3, side, side, Region::FullDisk, exec_for(state));
    benchmark::DoNotOptimize(img.pixels.data());
  }
  state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_RenderParameterPlane)
    ->ArgsProduct({{256, 512}, {0, 1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

// range(0): ray count, range(1): worker count (0 = serial reference).
void BM_BoundaryCurve(benchmark::State& state) {
  const int angles = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CurveTable t = boundary_curve(4, angles, exec_for(state));
    benchmark::DoNotOptimize(t.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * angles);
}
BENCHMARK(BM_BoundaryCurve)
    ->ArgsProduct({{1024, 4096}, {0, 1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_SZero(benchmark::State& state) {
  double psi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_zero(static_cast<int>(state.range(0)), psi));
    psi += 1e-3;
  }
}
BENCHMARK(BM_SZero)->DenseRange(2, 6);

void BM_Classify(benchmark::State& state) {
  const cplx w(0.3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(classify_unicritical(4, w));
}
BENCHMARK(BM_Classify);

void BM_Normalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteBlaschke f = conjugate({n, std::polar(0.4, 0.2)}, DiskMobius(1.1, cplx(0.2, -0.3)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(f));
}
BENCHMARK(BM_Normalize)->DenseRange(2, 6);

void BM_BackwardOrbit(benchmark::State& state) {
  const UnicriticalBlaschke b(3, cplx(0.2, 0.4));
  for (auto _ : state) {
    JuliaSample s = backward_orbit(b, 7, kDefaultTransient, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s.angles.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BackwardOrbit)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_StepProbe(benchmark::State& state) {
  const UnicriticalBlaschke b(2, -1.0 / 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(probe_hyperbolic_step(b));
}
BENCHMARK(BM_StepProbe)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
