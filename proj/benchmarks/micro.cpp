#include <benchmark/benchmark.h>

#include <vector>

#include "topopush/baselines.hpp"
#include "topopush/bench.hpp"
#include "topopush/homology.hpp"
#include "topopush/mcts.hpp"
#include "topopush/path_region.hpp"
#include "topopush/push_sim.hpp"
#include "topopush/random.hpp"

using namespace topopush;

namespace {

Scene scene_with(std::size_t obstacles, std::uint64_t seed = 7) {
  SceneSpec spec;
  spec.obstacle_count = obstacles;
  spec.seed = seed;
  return generate_scene(spec);
}

std::vector<Vec2> cloud(std::size_t n) {
  Rng rng(n);
  std::vector<Vec2> pts(n);
  for (auto& p : pts) p = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
  return pts;
}

}  // namespace

static void BM_PersistenceDiagram(benchmark::State& state) {
  const auto pts = cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(persistence_diagram(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PersistenceDiagram)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_PathRegion(benchmark::State& state) {
  const Scene s = scene_with(7);
  for (auto _ : state) benchmark::DoNotOptimize(compute_path_region(s.config, s.workspace));
}
BENCHMARK(BM_PathRegion);

static void BM_AvailableActions(benchmark::State& state) {
  const Scene s = scene_with(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(available_actions(s.config, s.workspace, 0.015, 0.05));
}
BENCHMARK(BM_AvailableActions)->Arg(3)->Arg(7)->Arg(11);

static void BM_SimulatePush(benchmark::State& state) {
  const Scene s = scene_with(static_cast<std::size_t>(state.range(0)));
  const auto actions = available_actions(s.config, s.workspace, 0.015, 0.05);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_push(s.config, s.workspace, actions[k]));
    k = (k + 1) % actions.size();
  }
}
BENCHMARK(BM_SimulatePush)->Arg(3)->Arg(7)->Arg(11);

static void BM_Planner(benchmark::State& state) {
  const Method m = all_methods()[static_cast<std::size_t>(state.range(0))];
  const Scene s = scene_with(7);
  PlannerParams p;
  for (auto _ : state) benchmark::DoNotOptimize(run_planner(m, s.config, s.workspace, p));
  state.SetLabel(std::string(method_name(m)));
}
BENCHMARK(BM_Planner)->DenseRange(0, 4);

static void BM_OpenLoopReplay(benchmark::State& state) {
  const Scene s = scene_with(7);
  const Plan plan = plan_phim(s.config, s.workspace, {});
  const Configuration noisy = apply_noise(s.config, s.workspace, 0.03, 1);
  for (auto _ : state) benchmark::DoNotOptimize(execute_open_loop(s.config, noisy, s.workspace, plan.actions));
}
BENCHMARK(BM_OpenLoopReplay);

BENCHMARK_MAIN();
