#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace topopush {

/// Absolute tolerance for disk-disk and disk-wall contact in feasibility checks (meters).
inline constexpr double kOverlapEpsilon = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Closed axis-aligned rectangle.
struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  bool contains(Vec2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  Rect expanded(double margin) const {
    return {x_min - margin, x_max + margin, y_min - margin, y_max + margin};
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Planar shelf cross-section. x runs along the depth (x = 0 is the open
/// face the arm enters through), y across the width (y = 0 is the south
/// wall, y = width_y the north wall).
struct Workspace {
  double depth_x = 0.8;
  double width_y = 0.7;
  double arm_width = 0.16;
  double gripper_width = 0.05;

  bool valid() const {
    return depth_x > 0.0 && width_y > 0.0 && gripper_width > 0.0 && gripper_width < width_y &&
           arm_width > 0.0 && arm_width <= width_y;
  }
  Rect bounds() const { return {0.0, depth_x, 0.0, width_y}; }

  friend bool operator==(const Workspace&, const Workspace&) = default;
};

/// Footprint of a cylindrical object.
struct Disk {
  Vec2 center;
  double radius = 0.0;

  friend bool operator==(const Disk&, const Disk&) = default;
};

struct GripperPose {
  Vec2 position;
  double heading = 0.0;

  friend bool operator==(const GripperPose&, const GripperPose&) = default;
};

/// Planner state: obstacle poses, target pose and gripper pose.
struct Configuration {
  std::vector<Disk> obstacles;
  Disk target;
  GripperPose gripper;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Bounds a single disk must satisfy: y in [r, width_y - r], x in [0, depth_x - r].
/// The open face at x = 0 is not a wall, so the disk may overhang it.
bool disk_within_walls(const Disk& d, const Workspace& ws, double tol = kOverlapEpsilon);

bool disks_overlap(const Disk& a, const Disk& b, double tol = kOverlapEpsilon);

/// True iff every object respects the wall bounds and no two objects overlap.
bool is_feasible(const Configuration& config, const Workspace& ws);

/// Closed disk vs closed rectangle (closest-point test).
bool disk_rect_intersect(const Disk& d, const Rect& rect);

/// Rotates p about pivot by angle (radians, counter-clockwise).
/// A zero angle returns p unchanged, bit for bit.
Vec2 rotate_about(Vec2 p, Vec2 pivot, double angle);

/// Shortest distance from p to the segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

std::vector<Vec2> obstacle_centers(const Configuration& config);

}  // namespace topopush
