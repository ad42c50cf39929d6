#include "topopush/geometry.hpp"

#include <algorithm>

namespace topopush {

bool disk_within_walls(const Disk& d, const Workspace& ws, double tol) {
  if (!(d.radius > 0.0)) return false;
  const double r = d.radius;
  return d.center.y >= r - tol && d.center.y <= ws.width_y - r + tol && d.center.x >= -tol &&
         d.center.x <= ws.depth_x - r + tol;
}

bool disks_overlap(const Disk& a, const Disk& b, double tol) {
  return distance(a.center, b.center) < a.radius + b.radius - tol;
}

bool is_feasible(const Configuration& config, const Workspace& ws) {
  if (!ws.valid()) return false;
  if (!disk_within_walls(config.target, ws)) return false;
  const auto& obs = config.obstacles;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (!disk_within_walls(obs[i], ws)) return false;
    if (disks_overlap(obs[i], config.target)) return false;
    for (std::size_t j = i + 1; j < obs.size(); ++j) {
      if (disks_overlap(obs[i], obs[j])) return false;
    }
  }
  const Vec2 g = config.gripper.position;
  return g.x >= 0.0 && g.x <= ws.depth_x && g.y >= 0.0 && g.y <= ws.width_y;
}

bool disk_rect_intersect(const Disk& d, const Rect& rect) {
  const double cx = std::clamp(d.center.x, rect.x_min, rect.x_max);
  const double cy = std::clamp(d.center.y, rect.y_min, rect.y_max);
  const double dx = d.center.x - cx;
  const double dy = d.center.y - cy;
  return dx * dx + dy * dy <= d.radius * d.radius;
}

Vec2 rotate_about(Vec2 p, Vec2 pivot, double angle) {
  if (angle == 0.0) return p;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double dx = p.x - pivot.x;
  const double dy = p.y - pivot.y;
  return {pivot.x + c * dx - s * dy, pivot.y + s * dx + c * dy};
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

std::vector<Vec2> obstacle_centers(const Configuration& config) {
  std::vector<Vec2> out;
  out.reserve(config.obstacles.size());
  for (const auto& d : config.obstacles) out.push_back(d.center);
  return out;
}

}  // namespace topopush
