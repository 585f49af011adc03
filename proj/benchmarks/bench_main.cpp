#include <benchmark/benchmark.h>

#include "motesim/kernel.hpp"
#include "motesim/radio.hpp"
#include "motesim/scenario.hpp"
#include "motesim/simulation.hpp"

namespace {

using namespace motesim;

void BM_KernelScheduleRun(benchmark::State& state) {
  const std::int64_t events = state.range(0);
  for (auto _ : state) {
    Kernel kernel;
    for (std::int64_t i = 0; i < events; ++i) {
      kernel.schedule(static_cast<Tick>(i % 1024), [] {});
    }
    benchmark::DoNotOptimize(kernel.run_until(2048));
  }
  state.SetItemsProcessed(state.iterations() * events);
}
BENCHMARK(BM_KernelScheduleRun)->Arg(1 << 10)->Arg(1 << 14);

void BM_RssiRoundTrip(benchmark::State& state) {
  const RadioSpec radio;
  const EnvironmentProfile env = lab_profile();
  RngStream rng(1, 1);
  double d = 1.0;
  for (auto _ : state) {
    const double rssi = rssi_at(radio, d, env, rng);
    benchmark::DoNotOptimize(estimate_distance(radio, rssi, env));
    d = d < 50.0 ? d + 0.01 : 1.0;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RssiRoundTrip);

void BM_PaperGridRun(benchmark::State& state) {
  ScenarioConfig config = paper_grid_scenario();
  config.duration_s = static_cast<double>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    config.seed = seed++;
    Simulation sim(config);
    benchmark::DoNotOptimize(sim.run());
  }
}
BENCHMARK(BM_PaperGridRun)->Arg(60)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
