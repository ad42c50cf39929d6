// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/cli.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/push_checks.hpp"
#include "support/tree_checks.hpp"
#include "topopush/bench.hpp"
#include "topopush/homology.hpp"
#include "topopush/mcts.hpp"
#include "topopush/scene_io.hpp"

using namespace topopush;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Verdict& v) {
  std::printf("criterion %d: %s  %s (%s)\n", id, v.pass ? "PASS" : "FAIL", title, v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Verdict persistent_radius_check() {
  const std::vector<double> deaths{0.062, 0.1, 0.116, 0.144};
  const auto t = Clock::now();
  const auto got = persistent_radii(deaths, 0.015, 0.05);
  const double s = since(t);
  return {got == deaths && s < 1e-3, "exact match " + std::string(got == deaths ? "yes" : "no") +
                                         ", " + fmt("%.2e s", s)};
}

Verdict homology_oracle() {
  const auto t = Clock::now();
  Rng rng(2024);
  std::size_t mismatches = 0;
  for (int set = 0; set < 200; ++set) {
    const auto pts = fixture::random_points(rng, 1 + rng.index(12), 0.6);
    auto expect = pts.size() <= 8 ? oracle::brute_force_mst(pts) : oracle::prim_mst(pts);
    for (double& d : expect) d /= 2.0;
    if (persistence_diagram(pts).deaths() != expect) ++mismatches;
    for (int k = 0; k < 50; ++k) {
      const double r = rng.uniform(0.0, 0.3);
      if (components_at(pts, r).blocks != oracle::bfs_components(pts, r)) ++mismatches;
    }
  }
  const double s = since(t);
  return {mismatches == 0 && s < 5.0, std::to_string(mismatches) + " mismatches, " + fmt("%.2f s", s)};
}

Verdict push_invariants() {
  const auto t = Clock::now();
  std::size_t pairs = 0, violations = 0;
  for (std::uint64_t seed = 0; pairs < 500; ++seed) {
    const Scene s = fixture::random_scene(mix_seed(77, seed), 4 + seed % 6);
    const auto actions = available_actions(s.config, s.workspace, 0.015, 0.05);
    Rng rng(seed);
    for (int k = 0; k < 2 && pairs < 500; ++k, ++pairs) {
      const PushAction a = actions[rng.index(actions.size())];
      violations += checks::push_violations(s.config, s.workspace, a).size();
    }
  }
  const double s = since(t);
  return {violations == 0 && s < 30.0,
          std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violations, " + fmt("%.2f s", s)};
}

struct BenchResult {
  std::vector<BenchRun> runs;
  std::vector<MethodSummary> summary;
  double seconds = 0.0;
};

BenchResult fifty_scenes() {
  std::vector<SceneSpec> specs(50);
  for (std::size_t k = 0; k < specs.size(); ++k) specs[k].seed = mix_seed(0, k);
  const auto t = Clock::now();
  BenchResult out;
  out.runs = run_benchmark(specs, {});
  out.seconds = since(t);
  std::vector<BenchRecord> records;
  for (const auto& r : out.runs) records.push_back(r.record);
  out.summary = summarize(records);
  return out;
}

const MethodSummary& of(const BenchResult& b, const char* m) {
  return *std::find_if(b.summary.begin(), b.summary.end(), [&](const auto& s) { return s.method == m; });
}

double actions_or_inf(const MethodSummary& s) { return s.mean_actions.value_or(1e9); }

Verdict relative_ordering(const BenchResult& b) {
  const MethodSummary& phim = of(b, "phim");
  std::string detail;
  bool a = true;
  for (const auto& s : b.summary) {
    detail += s.method + " plan " + fmt("%.2f", s.planning_success_rate) + " actions " +
              (s.mean_actions ? fmt("%.2f", *s.mean_actions) : "-") + " time " + fmt("%.2e", s.mean_seconds) +
              "; ";
    if (s.planning_success_rate > phim.planning_success_rate) a = false;
  }
  const double pa = actions_or_inf(phim);
  const bool b_ok = pa <= actions_or_inf(of(b, "phia")) + 0.25 && pa <= actions_or_inf(of(b, "ooa")) + 0.25;
  const MethodSummary& phis = of(b, "phis");
  const bool c_actions = actions_or_inf(phis) >= pa - 0.25;
  const bool c_time = phis.mean_seconds >= phim.mean_seconds;
  const bool runtime = b.seconds < 600.0;
  detail += std::string("(a) ") + (a ? "ok" : "violated") + ", (b) " + (b_ok ? "ok" : "violated") +
            ", (c) actions " + (c_actions ? "ok" : "violated") + " time " + (c_time ? "ok" : "violated") +
            ", run " + fmt("%.2f s", b.seconds);
  return {a && b_ok && c_actions && c_time && runtime, detail};
}

Verdict robustness(const BenchResult& b) {
  const MethodSummary& phim = of(b, "phim");
  const double need = 0.8 * phim.planning_success_rate;
  return {phim.execution_success_rate >= need,
          "execution " + fmt("%.2f", phim.execution_success_rate) + " vs required " + fmt("%.2f", need) +
              " (planning " + fmt("%.2f", phim.planning_success_rate) + ")"};
}

Verdict determinism() {
  const auto dir = cli::scratch("acceptance-determinism");
  const auto scene = (dir / "s.scene").string();
  save_scene_file(scene, fixture::random_scene(11));
  std::vector<std::string> differing;

  auto twice = [&](const std::string& name, const std::string& args, const std::function<std::string()>& read) {
    const auto a = cli::run(args);
    const std::string first = a.out + read();
    const auto b = cli::run(args);
    const std::string second = b.out + read();
    if (a.code != b.code || first != second || a.code < 0 || a.code > 1) differing.push_back(name);
  };
  auto none = [] { return std::string(); };

  for (const Method m : all_methods()) {
    const std::string name(method_name(m));
    twice("plan " + name, "plan --scene " + scene + " --method " + name + " --seed 5 --no-timing", none);
  }
  const auto plan = (dir / "p.plan").string();
  cli::run("plan --scene " + scene + " --method phim --seed 5 --no-timing --out " + plan);
  const auto svg = dir / "s.svg";
  twice("render", "render --scene " + scene + " --plan " + plan + " --out " + svg.string(),
        [&] { return cli::slurp(svg); });
  twice("diagram", "diagram --scene " + scene, none);
  const auto csv = dir / "b.csv";
  twice("bench", "bench --count 4 --seed 3 --jobs 2 --no-timing --csv " + csv.string(),
        [&] { return cli::slurp(csv); });

  std::string detail = "plan x5, render, diagram, bench";
  for (const auto& d : differing) detail += "; differs: " + d;
  return {differing.empty(), detail};
}

Verdict mcts_statistics() {
  const auto t = Clock::now();
  std::size_t violations = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const Scene s = fixture::random_scene(mix_seed(91, k), 5 + k % 5);
    PlannerParams p;
    p.seed = k;
    p.max_iterations = 200;
    p.stabilization_window = 200;
    MctsSearch search(s.config, s.workspace, p);
    search.run();
    std::vector<std::string> bad;
    checks::visit_conservation(search.root(), true, bad);
    checks::selection_checks(search.root(), bad);
    if (search.root().visits != search.expansions() || search.expansions() > 200) bad.push_back("root");
    violations += bad.size();
  }
  const double s = since(t);
  return {violations == 0 && s < 60.0,
          "100 searches, " + std::to_string(violations) + " violations, " + fmt("%.2f s", s)};
}

// Longest single push simulation over every action of a scene, repeated.
double slowest_simulation(const Configuration& c, const Workspace& ws) {
  double worst = 0.0;
  const auto actions = available_actions(c, ws, 0.015, 0.05);
  for (int rep = 0; rep < 20; ++rep) {
    for (const PushAction& a : actions) {
      const auto t = Clock::now();
      (void)simulate_push(c, ws, a);
      worst = std::max(worst, since(t));
    }
  }
  return worst;
}

// Disks along the midline with strictly growing gaps, so every merge radius
// persists, and the target right behind the last disk, so no sweep can clear
// it. The search trees are large and never reach a goal.
Scene long_horizon_scene() {
  Scene s;
  s.workspace = {7.0, 1.0, 0.1, 0.05};
  double x = 0.1;
  for (int k = 0; k < 16; ++k) {
    s.config.obstacles.push_back({{x, 0.5}, fixture::kR});
    x += 0.12 + 0.04 * k;
  }
  s.config.target = {{s.config.obstacles.back().center.x + 0.075, 0.5}, fixture::kR};
  s.config.gripper = {{0.0, 0.5}, 0.0};
  return s;
}

Verdict time_budget(const BenchResult& b) {
  const PlannerParams defaults;
  double worst_bench = 0.0;
  for (const auto& r : b.runs) worst_bench = std::max(worst_bench, r.record.planning_seconds);
  bool ok = worst_bench <= defaults.time_limit_s;

  // a 20 ms cap on a scene none of the searches can finish; reported planning
  // time, median of three runs
  const Scene s = long_horizon_scene();
  const double sim = slowest_simulation(s.config, s.workspace);
  std::string detail = "bench max " + fmt("%.2e s", worst_bench) + " of 500 s; 20 ms cap, one simulation " +
                       fmt("%.1e s", sim) + ", overshoot";
  std::size_t capped = 0;
  for (const Method m : all_methods()) {
    std::vector<double> over;
    for (int rep = 0; rep < 3; ++rep) {
      PlannerParams p;
      p.time_limit_s = 0.02;
      p.max_iterations = 100000000;
      p.stabilization_window = 100000000;
      p.max_depth = 20;
      const Plan plan = run_planner(m, s.config, s.workspace, p);
      capped += plan.status == PlanStatus::TimeBudgetExceeded;
      over.push_back(plan.stats.seconds - p.time_limit_s);
    }
    std::sort(over.begin(), over.end());
    if (over[1] > sim) ok = false;
    detail += " " + std::string(method_name(m)) + " " + fmt("%.1e", std::max(0.0, over[1]));
  }
  if (capped == 0) ok = false;
  return {ok, detail + "; " + std::to_string(capped) + " capped runs"};
}

}  // namespace

int main() {
  report(1, "persistent radii", persistent_radius_check());
  report(2, "homology oracle", homology_oracle());
  report(3, "push-model invariants", push_invariants());
  const BenchResult bench = fifty_scenes();
  report(4, "planner relative ordering", relative_ordering(bench));
  report(5, "robustness under noise", robustness(bench));
  report(6, "determinism", determinism());
  report(7, "search statistics", mcts_statistics());
  report(8, "time budget", time_budget(bench));
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
