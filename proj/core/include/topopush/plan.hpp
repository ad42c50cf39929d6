#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "topopush/geometry.hpp"
#include "topopush/push_sim.hpp"

namespace topopush {

/// Shared knobs for every planner. Defaults follow the experimental setup
/// the planners were designed around (nu = 1.5 cm actuation error, h = 5 cm
/// gripper width plus margin, c = sqrt(2), 500 s cap).
struct PlannerParams {
  double nu = 0.015;
  double h = 0.05;
  double c = std::sqrt(2.0);
  std::size_t max_iterations = 400;
  double time_limit_s = 500.0;
  std::size_t max_depth = 12;
  std::uint64_t seed = 0;
  std::size_t stabilization_window = 25;
};

enum class PlanStatus { Success, NoPlanFound, TimeBudgetExceeded };

const char* to_string(PlanStatus status);

struct PlanStats {
  std::size_t iterations = 0;   ///< expansions (MCTS) or search steps (baselines)
  std::size_t simulations = 0;  ///< push simulations performed
  double seconds = 0.0;         ///< wall clock
};

struct Plan {
  std::vector<PushAction> actions;
  std::vector<Configuration> states;  ///< configuration after each action
  bool success = false;
  PlanStatus status = PlanStatus::NoPlanFound;
  PlanStats stats;
};

struct ReplayResult {
  bool feasible = true;            ///< every action executed without a PushFailure
  bool goal = false;               ///< final configuration has a clear path region
  std::size_t executed = 0;        ///< actions applied before stopping
  std::vector<Configuration> states;
  Configuration final_config;
  std::string failure;             ///< reason when !feasible
};

/// Executes the actions in order from `start`. Singleton and straight pushes
/// are evaluated against the path region of `start`. Stops at the first
/// failure; a degenerate target pose counts as failure.
ReplayResult replay_plan(const Configuration& start, const Workspace& ws,
                         const std::vector<PushAction>& actions);

/// Open-loop execution of a plan made for `nominal` on the perturbed scene
/// `actual`. The plan is first replayed on `nominal` to learn which obstacles
/// each step moves; every step then pushes that same obstacle group on
/// `actual`, sized from the actual positions, without re-planning. Group
/// members that already left the actual path region are dropped and a step
/// with no members left is a no-op.
ReplayResult execute_open_loop(const Configuration& nominal, const Configuration& actual, const Workspace& ws,
                               const std::vector<PushAction>& actions);

}  // namespace topopush
