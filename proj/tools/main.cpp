#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "topopush/baselines.hpp"
#include "topopush/bench.hpp"
#include "topopush/errors.hpp"
#include "topopush/homology.hpp"
#include "topopush/plan_io.hpp"
#include "topopush/random.hpp"
#include "topopush/render.hpp"
#include "topopush/scene_io.hpp"

namespace {

using namespace topopush;

constexpr int kOk = 0;
constexpr int kPlannerFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw UsageError("failed writing '" + path + "'");
}

void add_planner_flags(CLI::App* cmd, PlannerParams& p) {
  cmd->add_option("--nu", p.nu, "persistence gap")->capture_default_str();
  cmd->add_option("--h", p.h, "minimum radius (gripper width)")->capture_default_str();
  cmd->add_option("--c", p.c, "UCB exploration constant")->capture_default_str();
  cmd->add_option("--iters", p.max_iterations, "MCTS iteration cap")->capture_default_str();
  cmd->add_option("--time-limit", p.time_limit_s, "planning time cap in seconds")->capture_default_str();
  cmd->add_option("--max-depth", p.max_depth, "maximum plan length")->capture_default_str();
  cmd->add_option("--seed", p.seed, "random seed")->capture_default_str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retrieval planning in cluttered shelves with persistent-homology pushes"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  PlannerParams params;
  bool no_timing = false;

  auto* plan_cmd = app.add_subcommand("plan", "plan pushes that clear the path to the target");
  std::string plan_scene, plan_method = "phim", plan_out;
  plan_cmd->add_option("--scene", plan_scene, "scene file")->required();
  plan_cmd->add_option("--method", plan_method, "phim|phia|phis|ooa|grtc")
      ->check(CLI::IsMember({"phim", "phia", "phis", "ooa", "grtc"}))
      ->capture_default_str();
  plan_cmd->add_option("--out", plan_out, "also write the plan to this file");
  plan_cmd->add_flag("--no-timing", no_timing, "report seconds as 0 for byte-stable output");
  add_planner_flags(plan_cmd, params);

  auto* bench_cmd = app.add_subcommand("bench", "benchmark planners on generated scenes");
  std::size_t count = 50;
  std::string methods_list = "phim,phia,phis,ooa,grtc", csv_path, summary_path, scenes_dir;
  BenchOptions bopts;
  SceneSpec base_spec;
  bench_cmd->add_option("--count", count, "number of scenes")->capture_default_str();
  bench_cmd->add_option("--methods", methods_list, "comma-separated methods")->capture_default_str();
  bench_cmd->add_option("--noise", bopts.noise_bound, "noise bound in meters")->capture_default_str();
  bench_cmd->add_option("--trials", bopts.noise_trials, "noisy replays per plan")->capture_default_str();
  bench_cmd->add_option("--obstacles", base_spec.obstacle_count, "obstacles per scene")->capture_default_str();
  bench_cmd->add_option("--jobs", bopts.jobs, "worker threads")->capture_default_str();
  bench_cmd->add_option("--csv", csv_path, "per-run records CSV")->required();
  bench_cmd->add_option("--summary", summary_path, "per-method summary CSV (default stdout)");
  bench_cmd->add_option("--scenes-dir", scenes_dir, "write scenes/<id>.scene and plans here");
  bench_cmd->add_flag("--no-timing", no_timing, "report seconds as 0 for byte-stable output");
  add_planner_flags(bench_cmd, params);

  auto* diagram_cmd = app.add_subcommand("diagram", "0-dim persistence diagram of the obstacle centers");
  std::string diagram_scene, diagram_csv;
  diagram_cmd->add_option("--scene", diagram_scene, "scene file")->required();
  diagram_cmd->add_option("--csv", diagram_csv, "output CSV (default stdout)");

  auto* render_cmd = app.add_subcommand("render", "draw a scene and optional plan as SVG");
  std::string render_scene, render_plan, render_out;
  bool no_region = false;
  render_cmd->add_option("--scene", render_scene, "scene file")->required();
  render_cmd->add_option("--plan", render_plan, "plan file");
  render_cmd->add_option("--out", render_out, "output SVG")->required();
  render_cmd->add_flag("--no-region", no_region, "omit the path region overlay");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*plan_cmd) {
      const Scene scene = load_scene_file(plan_scene);
      const Plan plan = run_planner(parse_method(plan_method), scene.config, scene.workspace, params);
      const std::string text = write_plan(plan, !no_timing);
      std::cout << text;
      if (!plan_out.empty()) write_file(plan_out, text);
      if (!plan.success) {
        std::cerr << "planner failed: " << to_string(plan.status) << "\n";
        return kPlannerFailure;
      }
      return kOk;
    }

    if (*bench_cmd) {
      if (count == 0) throw UsageError("--count must be positive");
      bopts.methods.clear();
      for (const auto& name : split_csv(methods_list)) bopts.methods.push_back(parse_method(name));
      if (bopts.methods.empty()) throw UsageError("--methods is empty");
      bopts.params = params;

      std::vector<SceneSpec> specs(count, base_spec);
      for (std::size_t i = 0; i < count; ++i) specs[i].seed = mix_seed(params.seed, i);
      const auto runs = run_benchmark(specs, bopts);

      std::vector<BenchRecord> records;
      for (const auto& r : runs) records.push_back(r.record);
      write_file(csv_path, records_csv(records, !no_timing));
      const std::string summary = summary_csv(summarize(records), !no_timing);
      if (summary_path.empty()) std::cout << summary;
      else write_file(summary_path, summary);

      if (!scenes_dir.empty()) {
        std::filesystem::create_directories(std::filesystem::path(scenes_dir) / "scenes");
        std::filesystem::create_directories(std::filesystem::path(scenes_dir) / "plans");
        for (const auto& r : runs) {
          const std::string id = std::to_string(r.record.scene_id);
          if (r.scene.config.target.radius <= 0.0) continue;  // generation failed
          write_file(scenes_dir + "/scenes/" + id + ".scene", write_scene(r.scene));
          write_file(scenes_dir + "/plans/" + id + "." + r.record.method + ".plan",
                     write_plan(r.plan, !no_timing));
        }
      }
      return kOk;
    }

    if (*diagram_cmd) {
      const Scene scene = load_scene_file(diagram_scene);
      const auto centers = obstacle_centers(scene.config);
      std::string out = "death_radius,component_size_a,component_size_b\n";
      if (!centers.empty()) {
        for (const auto& e : persistence_diagram(centers).events) {
          out += format_double(e.death_radius) + "," + std::to_string(e.component_a.size()) + "," +
                 std::to_string(e.component_b.size()) + "\n";
        }
      }
      if (diagram_csv.empty()) std::cout << out;
      else write_file(diagram_csv, out);
      return kOk;
    }

    if (*render_cmd) {
      const Scene scene = load_scene_file(render_scene);
      std::optional<std::vector<PushAction>> actions;
      if (!render_plan.empty()) actions = load_plan_file(render_plan).actions;
      write_file(render_out, render_svg(scene.workspace, scene.config, actions, !no_region));
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidStart& e) {
    std::cerr << "invalid start: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
