#include "topopush/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>

#include "topopush/errors.hpp"
#include "topopush/mcts.hpp"
#include "topopush/path_region.hpp"
#include "topopush/push_sim.hpp"
#include "topopush/random.hpp"

namespace topopush {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void check_start(const Configuration& config, const Workspace& ws) {
  if (!is_feasible(config, ws)) throw InvalidStart("start configuration is infeasible");
  if (is_goal(config, ws)) throw InvalidStart("path region is already clear");
}

void finish(Plan& plan, PlanStatus status, const Stopwatch& watch) {
  plan.status = status;
  plan.success = status == PlanStatus::Success;
  plan.stats.seconds = watch.seconds();
}

}  // namespace

Plan plan_phia(const Configuration& config, const Workspace& ws, const PlannerParams& params) {
  check_start(config, ws);
  Stopwatch watch;
  Plan plan;
  Configuration cur = config;

  while (plan.actions.size() < params.max_depth) {
    if (is_goal(cur, ws)) break;
    if (watch.seconds() >= params.time_limit_s) {
      finish(plan, PlanStatus::TimeBudgetExceeded, watch);
      return plan;
    }
    const double r = available_actions(cur, ws, params.nu, params.h).front().radius;
    bool moved = false;
    for (const Direction dir : {Direction::Up, Direction::Down}) {
      PushAction a;
      a.radius = r;
      a.direction = dir;
      PushResult res = simulate_push(cur, ws, a);
      ++plan.stats.simulations;
      if (auto* out = std::get_if<PushOutcome>(&res)) {
        cur = std::move(out->next);
        plan.actions.push_back(a);
        plan.states.push_back(cur);
        moved = true;
        break;
      }
    }
    ++plan.stats.iterations;
    if (!moved) {
      finish(plan, PlanStatus::NoPlanFound, watch);
      return plan;
    }
  }
  finish(plan, is_goal(cur, ws) ? PlanStatus::Success : PlanStatus::NoPlanFound, watch);
  return plan;
}

Plan plan_phis(const Configuration& config, const Workspace& ws, const PlannerParams& params) {
  check_start(config, ws);
  Stopwatch watch;
  Plan plan;

  struct Entry {
    Configuration config;
    std::size_t parent;
    PushAction action;
    bool goal;
  };
  std::vector<Entry> arena;
  arena.push_back({config, SIZE_MAX, {}, false});
  std::vector<std::size_t> level{0};

  for (std::size_t depth = 1; depth <= params.max_depth; ++depth) {
    std::vector<std::size_t> next;
    for (const std::size_t idx : level) {
      const auto actions = available_actions(arena[idx].config, ws, params.nu, params.h);
      ++plan.stats.iterations;
      for (const PushAction& a : actions) {
        if (watch.seconds() >= params.time_limit_s) {
          finish(plan, PlanStatus::TimeBudgetExceeded, watch);
          return plan;
        }
        PushResult res = simulate_push(arena[idx].config, ws, a);
        ++plan.stats.simulations;
        if (auto* out = std::get_if<PushOutcome>(&res)) {
          const bool goal = is_goal(out->next, ws);
          arena.push_back({std::move(out->next), idx, a, goal});
          next.push_back(arena.size() - 1);
        }
      }
    }
    for (const std::size_t idx : next) {
      if (!arena[idx].goal) continue;
      std::vector<std::size_t> chain;
      for (std::size_t k = idx; k != 0; k = arena[k].parent) chain.push_back(k);
      std::reverse(chain.begin(), chain.end());
      for (const std::size_t k : chain) {
        plan.actions.push_back(arena[k].action);
        plan.states.push_back(arena[k].config);
      }
      finish(plan, PlanStatus::Success, watch);
      return plan;
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  finish(plan, PlanStatus::NoPlanFound, watch);
  return plan;
}

Plan plan_ooa(const Configuration& config, const Workspace& ws, const PlannerParams& params) {
  check_start(config, ws);
  Stopwatch watch;
  Plan plan;
  const PathRegion region = compute_path_region(config, ws);
  const Vec2 gripper = region.to_frame(config.gripper.position);

  auto order = obstacles_in_region(config, region);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return distance(gripper, region.to_frame(config.obstacles[a].center)) <
           distance(gripper, region.to_frame(config.obstacles[b].center));
  });
  const double midline = 0.5 * (region.rect.y_min + region.rect.y_max);

  Configuration cur = config;
  for (const std::size_t i : order) {
    if (watch.seconds() >= params.time_limit_s) {
      finish(plan, PlanStatus::TimeBudgetExceeded, watch);
      return plan;
    }
    if (!disk_rect_intersect(region.to_frame(cur.obstacles[i]), region.rect)) continue;
    const Direction preferred =
        region.to_frame(cur.obstacles[i].center).y > midline ? Direction::Up : Direction::Down;
    const Direction other = preferred == Direction::Up ? Direction::Down : Direction::Up;
    bool moved = false;
    for (const Direction dir : {preferred, other}) {
      PushResult res = sweep_members(cur, ws, region, {i}, dir);
      ++plan.stats.simulations;
      if (auto* out = std::get_if<PushOutcome>(&res)) {
        cur = std::move(out->next);
        PushAction a;
        a.radius = cur.obstacles[i].radius;
        a.direction = dir;
        a.kind = PushKind::Singleton;
        a.obstacle = i;
        plan.actions.push_back(a);
        plan.states.push_back(cur);
        moved = true;
        break;
      }
    }
    ++plan.stats.iterations;
    if (!moved) {
      finish(plan, PlanStatus::NoPlanFound, watch);
      return plan;
    }
  }
  finish(plan, is_goal(cur, ws) ? PlanStatus::Success : PlanStatus::NoPlanFound, watch);
  return plan;
}

Plan plan_grtc(const Configuration& config, const Workspace& ws, const PlannerParams& params,
               std::uint64_t seed) {
  constexpr int kGoalSamples = 50;
  constexpr int kRetries = 5;

  check_start(config, ws);
  Stopwatch watch;
  Plan plan;
  Rng rng(seed);
  const PathRegion region = compute_path_region(config, ws);

  auto order = obstacles_in_region(config, region);
  for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.index(k)]);

  Configuration cur = config;
  for (const std::size_t i : order) {
    if (!disk_rect_intersect(region.to_frame(cur.obstacles[i]), region.rect)) continue;
    const double r = cur.obstacles[i].radius;
    bool moved = false;
    for (int attempt = 0; attempt < kRetries && !moved; ++attempt) {
      if (watch.seconds() >= params.time_limit_s) {
        finish(plan, PlanStatus::TimeBudgetExceeded, watch);
        return plan;
      }
      bool found = false;
      Vec2 goal;
      for (int s = 0; s < kGoalSamples && !found; ++s) {
        goal = {rng.uniform(r, ws.depth_x - r), rng.uniform(r, ws.width_y - r)};
        const Disk spot{goal, r};
        if (disk_rect_intersect(region.to_frame(spot), region.rect)) continue;
        if (disks_overlap(spot, cur.target)) continue;
        found = true;
        for (std::size_t j = 0; j < cur.obstacles.size() && found; ++j) {
          if (j != i && disks_overlap(spot, cur.obstacles[j])) found = false;
        }
      }
      ++plan.stats.iterations;
      if (!found) continue;

      PushResult res = push_straight(cur, ws, i, goal, region);
      ++plan.stats.simulations;
      if (auto* out = std::get_if<PushOutcome>(&res)) {
        PushAction a;
        a.radius = r;
        a.direction = goal.y >= cur.obstacles[i].center.y ? Direction::Up : Direction::Down;
        a.kind = PushKind::Straight;
        a.obstacle = i;
        a.goal = goal;
        cur = std::move(out->next);
        plan.actions.push_back(a);
        plan.states.push_back(cur);
        moved = true;
      }
    }
    if (!moved) {
      finish(plan, PlanStatus::NoPlanFound, watch);
      return plan;
    }
  }
  finish(plan, is_goal(cur, ws) ? PlanStatus::Success : PlanStatus::NoPlanFound, watch);
  return plan;
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::Phim, Method::Phia, Method::Phis, Method::Ooa,
                                           Method::Grtc};
  return methods;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Phim: return "phim";
    case Method::Phia: return "phia";
    case Method::Phis: return "phis";
    case Method::Ooa: return "ooa";
    case Method::Grtc: return "grtc";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (const Method m : all_methods()) {
    if (method_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

Plan run_planner(Method m, const Configuration& config, const Workspace& ws, const PlannerParams& params) {
  switch (m) {
    case Method::Phim: return plan_phim(config, ws, params);
    case Method::Phia: return plan_phia(config, ws, params);
    case Method::Phis: return plan_phis(config, ws, params);
    case Method::Ooa: return plan_ooa(config, ws, params);
    case Method::Grtc: return plan_grtc(config, ws, params, params.seed);
  }
  throw std::logic_error("unknown method");
}

}  // namespace topopush
