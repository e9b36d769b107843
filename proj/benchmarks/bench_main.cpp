#include <benchmark/benchmark.h>

#include "macrofin/econ.hpp"
#include "macrofin/integrator.hpp"
#include "macrofin/montecarlo.hpp"
#include "macrofin/parallel.hpp"

using namespace macrofin;

static void BM_VectorField(benchmark::State& state) {
  const ModelParams p;
  const EconState s{0.6, 0.65, 2.0, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(econ_vector_field(s, 0.03, p));
}
BENCHMARK(BM_VectorField);

static void BM_Step(benchmark::State& state) {
  const ModelParams p;
  const SimConfig cfg;
  const RngStream rng(cfg.seed, 0);
  EconState x = cfg.init_econ;
  MarketState m = resolved_init_market(cfg, p);
  std::uint64_t k = 0;
  for (auto _ : state) {
    const StepPlan plan = plan_step(x, m, p);
    const StepOutcome o = advance(x, m, plan, cfg.dt, draw_step_noise(rng, k++, plan.lams, cfg.dt), p);
    benchmark::DoNotOptimize(o);
  }
}
BENCHMARK(BM_Step);

static void BM_SimulatePath(benchmark::State& state) {
  const ModelParams p;
  SimConfig cfg;
  cfg.t_end = static_cast<double>(state.range(0));
  std::uint64_t run = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_path(cfg, p, run++));
}
BENCHMARK(BM_SimulatePath)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_Estimate(benchmark::State& state) {
  const ModelParams p;
  const SimConfig cfg;
  McOptions opt;
  opt.workers = default_workers();
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate(p, cfg, CrisisCriterion{}, state.range(0), opt));
  }
}
BENCHMARK(BM_Estimate)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
