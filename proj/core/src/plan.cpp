#include "topopush/plan.hpp"

#include <algorithm>

#include "topopush/errors.hpp"
#include "topopush/path_region.hpp"

namespace topopush {

const char* to_string(PlanStatus status) {
  switch (status) {
    case PlanStatus::Success: return "Success";
    case PlanStatus::NoPlanFound: return "NoPlanFound";
    case PlanStatus::TimeBudgetExceeded: return "TimeBudgetExceeded";
  }
  return "?";
}

ReplayResult replay_plan(const Configuration& start, const Workspace& ws,
                         const std::vector<PushAction>& actions) {
  ReplayResult out;
  out.final_config = start;
  try {
    const PathRegion initial = compute_path_region(start, ws);
    for (const PushAction& a : actions) {
      PushResult r = execute_action(out.final_config, ws, a, initial);
      if (auto* f = std::get_if<PushFailure>(&r)) {
        out.feasible = false;
        out.failure = std::string(to_string(f->kind)) + ": " + f->detail;
        break;
      }
      out.final_config = std::get<PushOutcome>(std::move(r)).next;
      out.states.push_back(out.final_config);
      ++out.executed;
    }
    out.goal = out.feasible && is_goal(out.final_config, ws);
  } catch (const NoValidRegion& e) {
    out.feasible = false;
    out.goal = false;
    out.failure = e.what();
  }
  return out;
}

ReplayResult execute_open_loop(const Configuration& nominal, const Configuration& actual, const Workspace& ws,
                               const std::vector<PushAction>& actions) {
  ReplayResult out;
  out.final_config = actual;
  try {
    const PathRegion nominal_initial = compute_path_region(nominal, ws);
    const PathRegion actual_initial = compute_path_region(actual, ws);
    Configuration plan_state = nominal;
    for (const PushAction& a : actions) {
      PushResult planned = execute_action(plan_state, ws, a, nominal_initial);
      if (auto* f = std::get_if<PushFailure>(&planned)) {
        out.feasible = false;
        out.failure = std::string("plan does not replay: ") + to_string(f->kind);
        break;
      }
      PushOutcome& step = std::get<PushOutcome>(planned);
      plan_state = std::move(step.next);

      const PathRegion region =
          a.kind == PushKind::Cluster ? compute_path_region(out.final_config, ws) : actual_initial;
      const auto inside = obstacles_in_region(out.final_config, region);
      std::vector<std::size_t> members;
      for (const std::size_t i : step.cluster) {
        if (std::find(inside.begin(), inside.end(), i) != inside.end()) members.push_back(i);
      }
      if (members.empty()) {
        out.states.push_back(out.final_config);
        ++out.executed;
        continue;
      }
      PushResult r = a.kind == PushKind::Straight
                         ? push_straight(out.final_config, ws, a.obstacle, a.goal, region)
                         : sweep_members(out.final_config, ws, region, members, a.direction);
      if (auto* f = std::get_if<PushFailure>(&r)) {
        out.feasible = false;
        out.failure = std::string(to_string(f->kind)) + ": " + f->detail;
        break;
      }
      out.final_config = std::get<PushOutcome>(std::move(r)).next;
      out.states.push_back(out.final_config);
      ++out.executed;
    }
    out.goal = out.feasible && is_goal(out.final_config, ws);
  } catch (const NoValidRegion& e) {
    out.feasible = false;
    out.goal = false;
    out.failure = e.what();
  }
  return out;
}

}  // namespace topopush
