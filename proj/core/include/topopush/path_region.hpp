#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "topopush/geometry.hpp"

namespace topopush {

/// Angles tried, in order, when the straight band does not fit between the
/// walls: +5, -5, +10, -10, ... +45, -45 degrees.
std::vector<double> incidence_angle_grid();

/// The rectangle between gripper and target that must be cleared.
///
/// `rect` lives in the region frame. In world coordinates the region is the
/// rectangle rotated by -phi about `pivot` (the target center); to_frame and
/// to_world convert between the two. With phi == 0 both are the identity,
/// bit for bit.
struct PathRegion {
  Rect rect;
  double phi = 0.0;
  Vec2 pivot;

  Vec2 to_frame(Vec2 world) const { return rotate_about(world, pivot, phi); }
  Vec2 to_world(Vec2 frame) const { return rotate_about(frame, pivot, -phi); }
  Disk to_frame(const Disk& d) const { return {to_frame(d.center), d.radius}; }
  Disk to_world(const Disk& d) const { return {to_world(d.center), d.radius}; }

  /// Corners in world coordinates, counter-clockwise from (x_min, y_min).
  std::array<Vec2, 4> world_corners() const;
};

/// Obstacle cluster chosen for a push.
struct ClusterSelection {
  std::vector<std::size_t> member_indices;  ///< ascending obstacle indices
  Rect bounding_rect;                       ///< region frame, tight over member disks
  double radius_used = 0.0;
};

/// Builds the band [min(g_x, T_x), max(g_x, T_x)] x [T_y - w, T_y + w] with
/// w = arm_width. If the band crosses a side wall, the smallest grid angle
/// whose gripper-end corners lie between the walls is used instead. Throws
/// NoValidRegion when no grid angle works.
PathRegion compute_path_region(const Configuration& config, const Workspace& ws);

/// True when both gripper-end corners of the band rotated by -phi lie
/// between the south and north walls.
bool region_fits(const Configuration& config, const Workspace& ws, double phi);

/// Indices of obstacles whose disk touches the region (closed test), ascending.
std::vector<std::size_t> obstacles_in_region(const Configuration& config, const PathRegion& region);

/// Components (radius r) of the in-region obstacles; returns the one with the
/// member center nearest the gripper, ties to the smallest member index.
/// Throws EmptyRegion when no obstacle is in the region.
ClusterSelection closest_component(const Configuration& config, const PathRegion& region, double r);

/// Tight box over the given obstacle disks in the region frame.
Rect cluster_bounds(const Configuration& config, const PathRegion& region,
                    const std::vector<std::size_t>& members);

}  // namespace topopush
