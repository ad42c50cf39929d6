#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topopush/geometry.hpp"
#include "topopush/plan.hpp"

namespace topopush {

/// Greedy: always the smallest persistent radius, up before down.
Plan plan_phia(const Configuration& config, const Workspace& ws, const PlannerParams& params);

/// Breadth-first over every persistent radius and direction; returns the
/// shallowest successful path, lexicographically smallest among equals.
/// Each level is expanded completely before it is checked for a goal.
Plan plan_phis(const Configuration& config, const Workspace& ws, const PlannerParams& params);

/// One obstacle at a time: every obstacle initially in the path region is
/// swept alone toward the nearer side of the band, nearest-to-gripper first,
/// against the initial region. Falls back to the other side if needed.
/// Obstacles already carried out of the region by an earlier push are skipped.
Plan plan_ooa(const Configuration& config, const Workspace& ws, const PlannerParams& params);

/// Randomized push-to-goal: each initially blocking obstacle (seeded random
/// order) is pushed in a straight line to a sampled free spot outside the
/// initial path region. Up to 50 goal samples per try and 5 tries per obstacle.
/// Obstacles that have already left the region are skipped.
Plan plan_grtc(const Configuration& config, const Workspace& ws, const PlannerParams& params,
               std::uint64_t seed);

enum class Method { Phim, Phia, Phis, Ooa, Grtc };

const std::vector<Method>& all_methods();
std::string_view method_name(Method m);
/// Throws std::invalid_argument for unknown names.
Method parse_method(std::string_view name);

/// Dispatches to the planner; phim and grtc take their seed from params.seed.
Plan run_planner(Method m, const Configuration& config, const Workspace& ws, const PlannerParams& params);

}  // namespace topopush
