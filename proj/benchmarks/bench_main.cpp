#include <benchmark/benchmark.h>

#include "dronecell/oracle.hpp"
#include "dronecell/scenario.hpp"
#include "dronecell/solver.hpp"

namespace {

using namespace dronecell;

Scenario bundled(const char* name) {
  return load_scenario(std::string(DRONECELL_SCENARIO_DIR "/") + name);
}

void BM_evaluate_objective(benchmark::State& state) {
  Scenario s = bundled("urban.json");
  const NetworkSnapshot snap = snapshot_at(s, 0.0);
  const std::size_t serving = select_serving_index(snap, s.request.poi);
  const Location3D at{s.request.poi.x, s.request.poi.y, 80.0};
  const Direction dir = direction_to(at, snap.stations[serving].location);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_objective(snap, serving, at, dir));
  }
}
BENCHMARK(BM_evaluate_objective);

void BM_evaluate_point(benchmark::State& state) {
  Scenario s = bundled("urban.json");
  const NetworkSnapshot snap = snapshot_at(s, 0.0);
  const std::size_t serving = select_serving_index(snap, s.request.poi);
  const Location3D at{s.request.poi.x, s.request.poi.y, 80.0};
  const Direction dir = direction_to(at, snap.stations[serving].location);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_point(snap, serving, s.request, at, dir));
  }
}
BENCHMARK(BM_evaluate_point);

void BM_solve_sparse(benchmark::State& state) {
  Scenario s = bundled("rural.json");
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(s.network, s.request));
  }
}
BENCHMARK(BM_solve_sparse)->Unit(benchmark::kMillisecond);

void BM_solve_dense(benchmark::State& state) {
  Scenario s = bundled("urban.json");
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(s.network, s.request));
  }
}
BENCHMARK(BM_solve_dense)->Unit(benchmark::kMillisecond);

void BM_oracle_small(benchmark::State& state) {
  Scenario s = bundled("testbed.json");
  OracleConfig cfg;
  cfg.points_per_axis = static_cast<int>(state.range(0));
  cfg.azimuth_samples = 12;
  cfg.polar_samples = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_solve(s.network, s.request, cfg));
  }
}
BENCHMARK(BM_oracle_small)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
