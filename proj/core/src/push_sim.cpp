#include "topopush/push_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "topopush/errors.hpp"
#include "topopush/homology.hpp"
#include "topopush/random.hpp"

namespace topopush {

bool action_less(const PushAction& a, const PushAction& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.radius != b.radius) return a.radius < b.radius;
  if (a.direction != b.direction) return a.direction < b.direction;
  if (a.obstacle != b.obstacle) return a.obstacle < b.obstacle;
  if (a.goal.x != b.goal.x) return a.goal.x < b.goal.x;
  return a.goal.y < b.goal.y;
}

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::WallPress: return "WallPress";
    case FailureKind::EntryBlocked: return "EntryBlocked";
    case FailureKind::TargetDisturbed: return "TargetDisturbed";
    case FailureKind::EmptyRegion: return "EmptyRegion";
  }
  return "?";
}

const char* to_string(Direction dir) { return dir == Direction::Up ? "up" : "down"; }

namespace {

// Local frame in which the push moves along +y. Built from a rotation about
// a pivot, optionally followed by a y-mirror for downward sweeps.
struct PushFrame {
  Vec2 pivot;
  double phi = 0.0;
  bool mirror = false;

  Vec2 to_local(Vec2 w) const {
    Vec2 p = rotate_about(w, pivot, phi);
    if (mirror) p.y = -p.y;
    return p;
  }
  Vec2 to_world(Vec2 p) const {
    if (mirror) p.y = -p.y;
    return rotate_about(p, pivot, -phi);
  }
};

PushFailure fail(FailureKind kind, std::string detail) { return {kind, std::move(detail)}; }

// Gripper box spans [x0, x1]; its front starts at `start` and stops at `end`.
PushResult run_sweep(const Configuration& config, const Workspace& ws, const PushFrame& frame,
                     double x0, double x1, double start, double end) {
  const double h = ws.gripper_width;
  const std::size_t n = config.obstacles.size();

  std::vector<Disk> local(n);
  for (std::size_t i = 0; i < n; ++i) {
    local[i] = {frame.to_local(config.obstacles[i].center), config.obstacles[i].radius};
  }
  const Disk target{frame.to_local(config.target.center), config.target.radius};

  const Rect start_box{x0, x1, start - h, start};
  for (std::size_t i = 0; i < n; ++i) {
    if (disk_rect_intersect(local[i], start_box)) {
      return fail(FailureKind::EntryBlocked, "gripper start pose touches obstacle " + std::to_string(i));
    }
  }
  if (disk_rect_intersect(target, start_box)) {
    return fail(FailureKind::EntryBlocked, "gripper start pose touches the target");
  }
  for (const Vec2 corner : {Vec2{x0, start - h}, Vec2{x1, start - h}, Vec2{x1, start}, Vec2{x0, start}}) {
    const Vec2 w = frame.to_world(corner);
    if (w.y < -kOverlapEpsilon || w.y > ws.width_y + kOverlapEpsilon ||
        w.x > ws.depth_x + kOverlapEpsilon) {
      return fail(FailureKind::EntryBlocked, "gripper start pose crosses a wall");
    }
  }

  const Rect swept{x0, x1, start - h, end};
  std::vector<double> y0(n), y(n), floor(n, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    y0[i] = y[i] = local[i].center.y;
    if (disk_rect_intersect(local[i], swept)) floor[i] = end + kPushClearance + local[i].radius;
  }

  // behind -> ahead contact links; x never changes, so the ordering is fixed
  struct Link {
    std::size_t behind;
    double offset;
  };
  std::vector<std::vector<Link>> links(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !(y0[j] > y0[i])) continue;
      const double reach = local[i].radius + local[j].radius;
      const double dx = local[j].center.x - local[i].center.x;
      if (std::abs(dx) >= reach) continue;
      links[j].push_back({i, std::sqrt(reach * reach - dx * dx)});
    }
  }

  std::size_t passes = 0;
  for (;;) {
    bool changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      double need = std::max(y[j], floor[j]);
      for (const Link& l : links[j]) {
        if (y[l.behind] > y0[l.behind]) need = std::max(need, y[l.behind] + l.offset);
      }
      if (need > y[j]) {
        y[j] = need;
        changed = true;
      }
    }
    if (!changed) break;
    if (++passes > n) throw std::logic_error("push resolution did not reach a fixpoint");
  }

  PushOutcome out;
  out.next = config;
  out.resolution_passes = passes;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(y[i] > y0[i])) continue;
    out.moved_indices.push_back(i);
    Disk moved = config.obstacles[i];
    moved.center = frame.to_world({local[i].center.x, y[i]});
    if (!disk_within_walls(moved, ws)) {
      return fail(FailureKind::WallPress, "obstacle " + std::to_string(i) + " pressed into a wall");
    }
    out.next.obstacles[i] = moved;
  }

  if (disk_rect_intersect(target, swept)) {
    return fail(FailureKind::TargetDisturbed, "gripper sweep crosses the target");
  }
  for (const std::size_t i : out.moved_indices) {
    const Vec2 a{local[i].center.x, y0[i]};
    const Vec2 b{local[i].center.x, y[i]};
    if (point_segment_distance(target.center, a, b) < local[i].radius + target.radius - kOverlapEpsilon) {
      return fail(FailureKind::TargetDisturbed, "obstacle " + std::to_string(i) + " hits the target");
    }
  }
  return out;
}

bool members_cleared(const Configuration& next, const PathRegion& region,
                     const std::vector<std::size_t>& members) {
  return std::none_of(members.begin(), members.end(), [&](std::size_t i) {
    return disk_rect_intersect(region.to_frame(next.obstacles[i]), region.rect);
  });
}

}  // namespace

PushResult sweep_members(const Configuration& config, const Workspace& ws, const PathRegion& region,
                         const std::vector<std::size_t>& members, Direction dir) {
  if (members.empty()) return fail(FailureKind::EmptyRegion, "no obstacle to push");
  for (const std::size_t i : members) {
    if (i >= config.obstacles.size()) throw std::out_of_range("sweep_members: obstacle index");
  }
  const Rect box = cluster_bounds(config, region, members);
  const PushFrame frame{region.pivot, region.phi, dir == Direction::Down};

  double near_edge, far_edge;
  if (dir == Direction::Up) {
    near_edge = box.y_min;
    far_edge = region.rect.y_max;
  } else {
    near_edge = -box.y_max;
    far_edge = -region.rect.y_min;
  }
  const double start = near_edge - 2.0 * kPushClearance;
  const double end = std::max(start, far_edge);

  PushResult r = run_sweep(config, ws, frame, box.x_min - kPushClearance, box.x_max + kPushClearance,
                           start, end);
  if (auto* out = std::get_if<PushOutcome>(&r)) {
    out->cluster = members;
    out->cleared_component = members_cleared(out->next, region, members);
  }
  return r;
}

PushResult simulate_push(const Configuration& config, const Workspace& ws, const PushAction& a) {
  const PathRegion region = compute_path_region(config, ws);
  if (obstacles_in_region(config, region).empty()) {
    return fail(FailureKind::EmptyRegion, "no obstacle in the path region");
  }
  const ClusterSelection sel = closest_component(config, region, a.radius);
  return sweep_members(config, ws, region, sel.member_indices, a.direction);
}

PushResult push_straight(const Configuration& config, const Workspace& ws, std::size_t obstacle,
                         Vec2 goal, const PathRegion& region) {
  if (obstacle >= config.obstacles.size()) throw std::out_of_range("push_straight: obstacle index");
  const Disk& d = config.obstacles[obstacle];
  const Vec2 v = goal - d.center;
  const double length = norm(v);
  if (length == 0.0) {
    PushOutcome out;
    out.next = config;
    out.cluster = {obstacle};
    out.cleared_component = members_cleared(out.next, region, out.cluster);
    return out;
  }
  const double heading = std::atan2(v.y, v.x);
  const PushFrame frame{d.center, std::numbers::pi / 2.0 - heading, false};
  const double half = ws.gripper_width / 2.0;
  const double start = d.center.y - d.radius - kPushClearance;

  PushResult r = run_sweep(config, ws, frame, d.center.x - half, d.center.x + half, start, start + length);
  if (auto* out = std::get_if<PushOutcome>(&r)) {
    out->cluster = {obstacle};
    out->cleared_component = members_cleared(out->next, region, out->cluster);
  }
  return r;
}

PushResult execute_action(const Configuration& config, const Workspace& ws, const PushAction& a,
                          const PathRegion& fixed_region) {
  switch (a.kind) {
    case PushKind::Cluster: return simulate_push(config, ws, a);
    case PushKind::Singleton:
      if (a.obstacle >= config.obstacles.size()) throw std::out_of_range("singleton push: obstacle index");
      return sweep_members(config, ws, fixed_region, {a.obstacle}, a.direction);
    case PushKind::Straight: return push_straight(config, ws, a.obstacle, a.goal, fixed_region);
  }
  throw std::logic_error("unknown push kind");
}

bool is_goal(const Configuration& config, const Workspace& ws) {
  return obstacles_in_region(config, compute_path_region(config, ws)).empty();
}

Configuration apply_noise(const Configuration& config, const Workspace& ws, double bound,
                          std::uint64_t seed) {
  if (bound < 0.0) throw std::invalid_argument("apply_noise: negative bound");
  if (bound == 0.0) return config;

  Rng rng(seed);
  Configuration out = config;
  const std::size_t n = out.obstacles.size();
  auto disk_at = [&](std::size_t k) -> Disk& { return k < n ? out.obstacles[k] : out.target; };

  for (std::size_t k = 0; k <= n; ++k) {
    const Disk original = disk_at(k);
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      const double rho = bound * std::sqrt(rng.uniform());
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      const Disk candidate{{original.center.x + rho * std::cos(theta),
                            original.center.y + rho * std::sin(theta)},
                           original.radius};
      if (!disk_within_walls(candidate, ws)) continue;
      bool clear = true;
      for (std::size_t m = 0; m <= n && clear; ++m) {
        if (m != k && disks_overlap(candidate, disk_at(m))) clear = false;
      }
      if (clear) {
        disk_at(k) = candidate;
        placed = true;
      }
    }
    if (!placed) {
      throw NoisyInfeasible("could not perturb object " + std::to_string(k) + " within 100 tries");
    }
  }
  return out;
}

std::vector<PushAction> available_actions(const Configuration& config, const Workspace& ws,
                                          double nu, double h) {
  const PathRegion region = compute_path_region(config, ws);
  const auto inside = obstacles_in_region(config, region);
  if (inside.empty()) throw EmptyRegion("no obstacle in the path region");
  std::vector<Vec2> centers;
  for (const std::size_t i : inside) centers.push_back(region.to_frame(config.obstacles[i].center));
  const auto radii = persistent_radii(persistence_diagram(centers), nu, h);

  std::vector<PushAction> out;
  for (const double r : radii) {
    PushAction a;
    a.radius = r;
    a.direction = Direction::Up;
    out.push_back(a);
    a.direction = Direction::Down;
    out.push_back(a);
  }
  return out;
}

}  // namespace topopush
