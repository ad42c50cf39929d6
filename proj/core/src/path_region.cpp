#include "topopush/path_region.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "topopush/errors.hpp"
#include "topopush/homology.hpp"

namespace topopush {

std::vector<double> incidence_angle_grid() {
  std::vector<double> out;
  for (int deg = 5; deg <= 45; deg += 5) {
    const double rad = deg * std::numbers::pi / 180.0;
    out.push_back(rad);
    out.push_back(-rad);
  }
  return out;
}

std::array<Vec2, 4> PathRegion::world_corners() const {
  return {to_world(Vec2{rect.x_min, rect.y_min}), to_world(Vec2{rect.x_max, rect.y_min}),
          to_world(Vec2{rect.x_max, rect.y_max}), to_world(Vec2{rect.x_min, rect.y_max})};
}

namespace {

PathRegion band_for(const Configuration& config, const Workspace& ws, double phi) {
  PathRegion region;
  region.phi = phi;
  region.pivot = config.target.center;
  const Vec2 t = config.target.center;
  const Vec2 g = region.to_frame(config.gripper.position);
  region.rect = {std::min(g.x, t.x), std::max(g.x, t.x), t.y - ws.arm_width, t.y + ws.arm_width};
  return region;
}

}  // namespace

bool region_fits(const Configuration& config, const Workspace& ws, double phi) {
  const PathRegion region = band_for(config, ws, phi);
  const Vec2 g = region.to_frame(config.gripper.position);
  for (const double y : {region.rect.y_min, region.rect.y_max}) {
    const Vec2 corner = region.to_world(Vec2{g.x, y});
    if (corner.y < 0.0 || corner.y > ws.width_y) return false;
  }
  return true;
}

PathRegion compute_path_region(const Configuration& config, const Workspace& ws) {
  if (region_fits(config, ws, 0.0)) {
    PathRegion region = band_for(config, ws, 0.0);
    Rect& r = region.rect;
    r.x_min = std::clamp(r.x_min, 0.0, ws.depth_x);
    r.x_max = std::clamp(r.x_max, 0.0, ws.depth_x);
    r.y_min = std::clamp(r.y_min, 0.0, ws.width_y);
    r.y_max = std::clamp(r.y_max, 0.0, ws.width_y);
    return region;
  }
  for (const double phi : incidence_angle_grid()) {
    if (region_fits(config, ws, phi)) return band_for(config, ws, phi);
  }
  throw NoValidRegion("no incidence angle up to 45 degrees fits the path region between the walls");
}

std::vector<std::size_t> obstacles_in_region(const Configuration& config, const PathRegion& region) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < config.obstacles.size(); ++i) {
    if (disk_rect_intersect(region.to_frame(config.obstacles[i]), region.rect)) out.push_back(i);
  }
  return out;
}

Rect cluster_bounds(const Configuration& config, const PathRegion& region,
                    const std::vector<std::size_t>& members) {
  Rect box{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const std::size_t i : members) {
    const Disk d = region.to_frame(config.obstacles[i]);
    box.x_min = std::min(box.x_min, d.center.x - d.radius);
    box.x_max = std::max(box.x_max, d.center.x + d.radius);
    box.y_min = std::min(box.y_min, d.center.y - d.radius);
    box.y_max = std::max(box.y_max, d.center.y + d.radius);
  }
  return box;
}

ClusterSelection closest_component(const Configuration& config, const PathRegion& region, double r) {
  const auto inside = obstacles_in_region(config, region);
  if (inside.empty()) throw EmptyRegion("no obstacle in the path region");

  std::vector<Vec2> centers;
  centers.reserve(inside.size());
  for (const std::size_t i : inside) centers.push_back(region.to_frame(config.obstacles[i].center));
  const Vec2 gripper = region.to_frame(config.gripper.position);

  const Partition part = components_at(centers, r);
  const std::vector<std::size_t>* best = nullptr;
  double best_dist = std::numeric_limits<double>::infinity();
  // blocks are ordered by smallest member, so strict '<' keeps the smallest index on ties
  for (const auto& block : part.blocks) {
    double d = std::numeric_limits<double>::infinity();
    for (const std::size_t k : block) d = std::min(d, distance(gripper, centers[k]));
    if (d < best_dist) {
      best_dist = d;
      best = &block;
    }
  }

  ClusterSelection sel;
  sel.radius_used = r;
  for (const std::size_t k : *best) sel.member_indices.push_back(inside[k]);
  sel.bounding_rect = cluster_bounds(config, region, sel.member_indices);
  return sel;
}

}  // namespace topopush
