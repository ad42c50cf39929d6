#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topopush/geometry.hpp"
#include "topopush/push_sim.hpp"

namespace topopush {

/// SVG 1.1 drawing of the shelf seen from above: open face on the left,
/// walls, obstacles, the target in red, optionally the path region and one
/// `action-arrow` line per executed plan step (from the centroid of the moved
/// disks before the push to the centroid after). Output depends only on the
/// inputs.
std::string render_svg(const Workspace& ws, const Configuration& config,
                       const std::optional<std::vector<PushAction>>& plan = std::nullopt,
                       bool region_overlay = true);

}  // namespace topopush
