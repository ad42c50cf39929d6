#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topopush/baselines.hpp"
#include "topopush/plan.hpp"
#include "topopush/scene_io.hpp"

namespace topopush {

/// Parameters of a procedurally generated shelf scene.
struct SceneSpec {
  std::size_t obstacle_count = 7;
  double radius_min = 0.035;
  double radius_max = 0.035;
  Workspace workspace;
  std::uint64_t seed = 0;
  double band_bias = 0.5;         ///< chance an obstacle is drawn inside the path band
  double target_y_margin = 0.08;  ///< room kept between the band and each side wall
  double min_gap = 0.01;          ///< minimum free space between any two disks
};

/// Target near the back wall (rear third of the depth), gripper at the open
/// face in line with it, obstacles by seeded rejection sampling with most of
/// them drawn inside the path band. With obstacle_count > 0 at least one
/// obstacle blocks the path region. Throws GenerationFailed when the spec is
/// too dense to place.
Scene generate_scene(const SceneSpec& spec);

struct BenchRecord {
  std::size_t scene_id = 0;
  std::string method;
  bool planning_success = false;
  bool execution_success = false;
  std::size_t action_count = 0;
  double planning_seconds = 0.0;
};

/// Record plus what produced it, for replay validation.
struct BenchRun {
  BenchRecord record;
  Scene scene;
  Plan plan;
};

struct BenchOptions {
  std::vector<Method> methods = all_methods();
  PlannerParams params;
  double noise_bound = 0.03;
  std::size_t noise_trials = 5;
  std::size_t jobs = 1;
};

/// Seed for noise trial `trial` of a scene; shared by all methods.
std::uint64_t noise_seed(std::uint64_t scene_seed, std::size_t trial);

/// True when open-loop execution of the plan on every noisy copy of the scene
/// ends with a clear path region.
bool execution_succeeds(const Scene& scene, const std::vector<PushAction>& actions, double noise_bound,
                        std::size_t noise_trials, std::uint64_t scene_seed);

/// Plans every (scene, method) pair on the nominal scene, then replays each
/// successful plan on noise_trials perturbed copies. Results are ordered by
/// scene then method regardless of `jobs`. Failures are recorded, never thrown.
std::vector<BenchRun> run_benchmark(const std::vector<SceneSpec>& specs, const BenchOptions& options);

struct MethodSummary {
  std::string method;
  std::size_t records = 0;
  std::optional<double> mean_actions;  ///< over successful plans only
  double mean_seconds = 0.0;
  double planning_success_rate = 0.0;
  double execution_success_rate = 0.0;
};

/// Per-method aggregates, in canonical method order. Exactly invariant under
/// record permutation. Throws EmptyInput on no records.
std::vector<MethodSummary> summarize(const std::vector<BenchRecord>& records);

/// `scene_id,method,planning_success,execution_success,actions,seconds`
std::string records_csv(const std::vector<BenchRecord>& records, bool report_seconds = true);
std::string summary_csv(const std::vector<MethodSummary>& summary, bool report_seconds = true);

}  // namespace topopush
