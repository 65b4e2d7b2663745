#include <benchmark/benchmark.h>

#include "radls/optimizers.hpp"
#include "radls/problems.hpp"
#include "radls/radial.hpp"
#include "radls/rng.hpp"

using namespace radls;

namespace {

// Grid probe along a fixed ray; the dominant inner loop of every solver.
void BM_RadialEstimate(benchmark::State& state) {
  const Problem& p = problems::find(state.range(0) == 0 ? "Sphere"
                                                        : "EggHolder")
                         .problem;
  GridParams grid;
  const Vec x = p.domain.midpoint();
  const Vec h = axis_direction(p.dim(), 0, +1.0);
  std::int64_t probes = 0;
  for (auto _ : state) {
    RadialEstimate est = radial_epiderivative(p, x, h, grid);
    probes += est.probes;
    benchmark::DoNotOptimize(est.value);
  }
  state.SetItemsProcessed(probes);
}
BENCHMARK(BM_RadialEstimate)->Arg(0)->Arg(1);

void BM_RadialEstimateShortRay(benchmark::State& state) {
  // Ray that exits the box almost immediately: measures fixed overhead.
  const Problem& p = problems::find("Sphere").problem;
  GridParams grid;
  const Vec x{5.0, 0.0};
  const Vec h = axis_direction(2, 0, +1.0);
  for (auto _ : state) {
    RadialEstimate est = radial_epiderivative(p, x, h, grid);
    benchmark::DoNotOptimize(est.value);
  }
}
BENCHMARK(BM_RadialEstimateShortRay);

void BM_Oracle(benchmark::State& state) {
  const Problem& p = problems::find("Rastrigin").problem;
  const Vec x{1.0, -1.0};
  const Vec h{-0.6, 0.8};
  for (auto _ : state) {
    double v = radial_epiderivative_oracle(p, x, h, 2.0,
                                           state.range(0));
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Oracle)->Arg(1000)->Arg(100000);

void BM_RccSolve(benchmark::State& state) {
  const Problem& p =
      problems::find(state.range(0) == 0 ? "Sphere" : "Giunta").problem;
  for (auto _ : state) {
    RunResult r = rcc_minimize(p, GridParams{}, StopConfig{});
    benchmark::DoNotOptimize(r.best_f);
  }
}
BENCHMARK(BM_RccSolve)->Arg(0)->Arg(1);

void BM_RpsoIteration(benchmark::State& state) {
  // Small swarm and budget: per-iteration cost of the probe-driven swarm.
  const Problem& p = problems::find("Rastrigin").problem;
  SwarmConfig cfg;
  cfg.particles = static_cast<int>(state.range(0));
  StopConfig stop;
  stop.iteration_limit = 20;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RunResult r = rpso_minimize(p, cfg, GridParams{}, stop, seed++);
    benchmark::DoNotOptimize(r.best_f);
    state.SetIterationTime(r.wall_time);
  }
}
BENCHMARK(BM_RpsoIteration)->Arg(5)->Arg(20)->UseManualTime();

void BM_EvaluateRegistry(benchmark::State& state) {
  const auto& entries = problems::registry();
  RngStream rng(3);
  std::int64_t n = 0;
  for (auto _ : state) {
    for (const auto& e : entries) {
      Vec x(e.problem.dim());
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = rng.uniform(e.problem.domain.lower[j],
                           e.problem.domain.upper[j]);
      }
      benchmark::DoNotOptimize(e.problem.objective(x));
      ++n;
    }
  }
  state.SetItemsProcessed(n);
}
BENCHMARK(BM_EvaluateRegistry);

}  // namespace

BENCHMARK_MAIN();
