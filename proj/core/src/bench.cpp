#include "topopush/bench.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "topopush/errors.hpp"
#include "topopush/path_region.hpp"
#include "topopush/push_sim.hpp"
#include "topopush/random.hpp"

namespace topopush {

namespace {

constexpr int kSceneAttempts = 200;
constexpr int kPlacementTries = 500;

}  // namespace

Scene generate_scene(const SceneSpec& spec) {
  const Workspace& ws = spec.workspace;
  if (!ws.valid()) throw std::invalid_argument("generate_scene: invalid workspace");
  if (!(spec.radius_min > 0.0) || spec.radius_max < spec.radius_min) {
    throw std::invalid_argument("generate_scene: invalid radius range");
  }
  Rng rng(spec.seed);

  for (int attempt = 0; attempt < kSceneAttempts; ++attempt) {
    Scene scene;
    scene.workspace = ws;
    Configuration& c = scene.config;

    const double rt = rng.uniform(spec.radius_min, spec.radius_max);
    const double tx_hi = ws.depth_x - rt;
    const double tx_lo = std::min(2.0 * ws.depth_x / 3.0, tx_hi);
    double ty_lo = std::max(ws.arm_width + spec.target_y_margin, rt);
    double ty_hi = std::min(ws.width_y - ws.arm_width - spec.target_y_margin, ws.width_y - rt);
    if (ty_lo > ty_hi) {
      ty_lo = rt;
      ty_hi = ws.width_y - rt;
    }
    c.target = {{rng.uniform(tx_lo, tx_hi), rng.uniform(ty_lo, ty_hi)}, rt};
    c.gripper = {{0.0, c.target.center.y}, 0.0};

    const double band_lo = c.target.center.y - ws.arm_width;
    const double band_hi = c.target.center.y + ws.arm_width;
    bool placed_all = true;
    for (std::size_t k = 0; k < spec.obstacle_count && placed_all; ++k) {
      bool placed = false;
      for (int t = 0; t < kPlacementTries && !placed; ++t) {
        const double r = rng.uniform(spec.radius_min, spec.radius_max);
        Vec2 p;
        if (rng.uniform() < spec.band_bias) {
          const double x_hi = std::max(r, c.target.center.x - rt - r);
          p = {rng.uniform(r, x_hi),
               rng.uniform(std::max(r, band_lo), std::min(ws.width_y - r, band_hi))};
        } else {
          p = {rng.uniform(r, ws.depth_x - r), rng.uniform(r, ws.width_y - r)};
        }
        const Disk d{p, r};
        if (!disk_within_walls(d, ws, 0.0)) continue;
        if (distance(p, c.target.center) < r + rt + spec.min_gap) continue;
        bool clear = true;
        for (const Disk& o : c.obstacles) {
          if (distance(p, o.center) < r + o.radius + spec.min_gap) {
            clear = false;
            break;
          }
        }
        if (clear) {
          c.obstacles.push_back(d);
          placed = true;
        }
      }
      placed_all = placed;
    }
    if (!placed_all || !is_feasible(c, ws)) continue;
    if (spec.obstacle_count > 0 && is_goal(c, ws)) continue;
    return scene;
  }
  throw GenerationFailed("could not place " + std::to_string(spec.obstacle_count) +
                         " obstacles after " + std::to_string(kSceneAttempts) + " attempts");
}

std::uint64_t noise_seed(std::uint64_t scene_seed, std::size_t trial) {
  return mix_seed(scene_seed, 1000 + trial);
}

bool execution_succeeds(const Scene& scene, const std::vector<PushAction>& actions, double noise_bound,
                        std::size_t noise_trials, std::uint64_t scene_seed) {
  if (noise_trials == 0) return execute_open_loop(scene.config, scene.config, scene.workspace, actions).goal;
  for (std::size_t t = 0; t < noise_trials; ++t) {
    Configuration noisy;
    try {
      noisy = apply_noise(scene.config, scene.workspace, noise_bound, noise_seed(scene_seed, t));
    } catch (const NoisyInfeasible&) {
      return false;
    }
    if (!execute_open_loop(scene.config, noisy, scene.workspace, actions).goal) return false;
  }
  return true;
}

std::vector<BenchRun> run_benchmark(const std::vector<SceneSpec>& specs, const BenchOptions& options) {
  if (specs.empty()) throw EmptyInput("run_benchmark: no scenes");
  const std::size_t per_scene = options.methods.size();
  std::vector<BenchRun> runs(specs.size() * per_scene);

  auto work = [&](std::size_t s) {
    const SceneSpec& spec = specs[s];
    std::optional<Scene> scene;
    try {
      scene = generate_scene(spec);
    } catch (const GenerationFailed&) {
    }
    for (std::size_t m = 0; m < per_scene; ++m) {
      BenchRun& run = runs[s * per_scene + m];
      run.record.scene_id = s;
      run.record.method = std::string(method_name(options.methods[m]));
      if (!scene) continue;
      run.scene = *scene;
      PlannerParams params = options.params;
      params.seed = mix_seed(spec.seed, options.params.seed);
      try {
        run.plan = run_planner(options.methods[m], scene->config, scene->workspace, params);
      } catch (const InvalidStart&) {
        continue;
      }
      if (run.plan.success && !replay_plan(scene->config, scene->workspace, run.plan.actions).goal) {
        throw std::logic_error("benchmark: plan from " + run.record.method + " does not replay");
      }
      run.record.planning_success = run.plan.success;
      run.record.action_count = run.plan.actions.size();
      run.record.planning_seconds = run.plan.stats.seconds;
      run.record.execution_success =
          run.plan.success && execution_succeeds(*scene, run.plan.actions, options.noise_bound,
                                                 options.noise_trials, spec.seed);
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, specs.size()));
  if (jobs == 1) {
    for (std::size_t s = 0; s < specs.size(); ++s) work(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t s = next++; s < specs.size(); s = next++) work(s);
      });
    }
    for (auto& t : pool) t.join();
  }
  return runs;
}

std::vector<MethodSummary> summarize(const std::vector<BenchRecord>& records) {
  if (records.empty()) throw EmptyInput("summarize: no records");

  std::map<std::string, std::vector<const BenchRecord*>> by_method;
  for (const auto& r : records) by_method[r.method].push_back(&r);

  std::vector<std::string> order;
  for (const Method m : all_methods()) {
    if (by_method.count(std::string(method_name(m)))) order.emplace_back(method_name(m));
  }
  for (const auto& [name, _] : by_method) {
    if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  }

  // sorting before summing makes the result independent of record order
  auto sorted_mean = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (const double x : v) s += x;
    return s / static_cast<double>(v.size());
  };

  std::vector<MethodSummary> out;
  for (const auto& name : order) {
    const auto& rs = by_method[name];
    MethodSummary sum;
    sum.method = name;
    sum.records = rs.size();
    std::vector<double> actions, seconds;
    std::size_t planned = 0, executed = 0;
    for (const BenchRecord* r : rs) {
      seconds.push_back(r->planning_seconds);
      if (r->planning_success) {
        ++planned;
        actions.push_back(static_cast<double>(r->action_count));
      }
      if (r->execution_success) ++executed;
    }
    if (!actions.empty()) sum.mean_actions = sorted_mean(actions);
    sum.mean_seconds = sorted_mean(seconds);
    sum.planning_success_rate = static_cast<double>(planned) / static_cast<double>(rs.size());
    sum.execution_success_rate = static_cast<double>(executed) / static_cast<double>(rs.size());
    out.push_back(sum);
  }
  return out;
}

std::string records_csv(const std::vector<BenchRecord>& records, bool report_seconds) {
  std::string out = "scene_id,method,planning_success,execution_success,actions,seconds\n";
  for (const auto& r : records) {
    out += std::to_string(r.scene_id) + "," + r.method + "," + (r.planning_success ? "true" : "false") +
           "," + (r.execution_success ? "true" : "false") + "," + std::to_string(r.action_count) + "," +
           format_fixed(report_seconds ? r.planning_seconds : 0.0, 6) + "\n";
  }
  return out;
}

std::string summary_csv(const std::vector<MethodSummary>& summary, bool report_seconds) {
  std::string out = "method,mean_actions,mean_seconds,planning_success_rate,execution_success_rate\n";
  for (const auto& s : summary) {
    out += s.method + "," + (s.mean_actions ? format_fixed(*s.mean_actions, 4) : std::string()) + "," +
           format_fixed(report_seconds ? s.mean_seconds : 0.0, 6) + "," +
           format_fixed(s.planning_success_rate, 4) + "," + format_fixed(s.execution_success_rate, 4) +
           "\n";
  }
  return out;
}

}  // namespace topopush
