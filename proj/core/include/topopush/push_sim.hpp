#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "topopush/geometry.hpp"
#include "topopush/path_region.hpp"

namespace topopush {

/// Gap left between the gripper front and every disk it pushes (meters).
inline constexpr double kPushClearance = 0.01;

/// Sweep direction in the region frame: up is +y, down is -y.
enum class Direction { Up, Down };

/// What a push action addresses. Cluster pushes are the persistent-homology
/// actions; the other two are used by the OOA and GRTC-H baselines.
enum class PushKind {
  Cluster,    ///< sweep the gripper-closest cluster at `radius`
  Singleton,  ///< sweep obstacle `obstacle` alone, region fixed by the caller
  Straight,   ///< push obstacle `obstacle` in a straight line to `goal`
};

struct PushAction {
  double radius = 0.0;
  Direction direction = Direction::Up;
  PushKind kind = PushKind::Cluster;
  std::size_t obstacle = 0;
  Vec2 goal;

  friend bool operator==(const PushAction&, const PushAction&) = default;
};

/// Total order used for tie-breaking: ascending radius, up before down.
bool action_less(const PushAction& a, const PushAction& b);

struct PushOutcome {
  Configuration next;
  std::vector<std::size_t> moved_indices;
  std::vector<std::size_t> cluster;  ///< obstacles the push was aimed at
  bool cleared_component = false;    ///< every cluster member left the region
  std::size_t resolution_passes = 0; ///< productive passes of the contact resolution
};

enum class FailureKind { WallPress, EntryBlocked, TargetDisturbed, EmptyRegion };

struct PushFailure {
  FailureKind kind = FailureKind::EmptyRegion;
  std::string detail;
};

using PushResult = std::variant<PushOutcome, PushFailure>;

inline bool succeeded(const PushResult& r) { return std::holds_alternative<PushOutcome>(r); }
const char* to_string(FailureKind kind);
const char* to_string(Direction dir);

/// Sweeps the gripper-closest cluster at radius a.radius across the path region.
///
/// The gripper is a box spanning the cluster's x-extent (plus clearance) and
/// gripper_width deep. It starts just outside the cluster on the trailing
/// side and advances until its front reaches the far edge of the region, so
/// every member ends at least kPushClearance beyond the region. Disks touched
/// by the gripper end kPushClearance ahead of its front; disks hit by moving
/// disks are pushed along the same axis just far enough to separate. Nothing
/// moves sideways or backwards. Fails without touching the configuration when
/// the start pose is blocked, a disk would be forced through a wall, or the
/// target would be touched.
PushResult simulate_push(const Configuration& config, const Workspace& ws, const PushAction& a);

/// Same sweep for an explicit set of obstacles and a caller-provided region.
PushResult sweep_members(const Configuration& config, const Workspace& ws, const PathRegion& region,
                         const std::vector<std::size_t>& members, Direction dir);

/// Pushes one obstacle in a straight line so its center lands on `goal`,
/// with the same gripper, contact-chain, wall and target rules as a sweep.
/// `region` only feeds the cleared_component flag.
PushResult push_straight(const Configuration& config, const Workspace& ws, std::size_t obstacle,
                         Vec2 goal, const PathRegion& region);

/// Runs any action kind. Singleton pushes use `fixed_region`.
PushResult execute_action(const Configuration& config, const Workspace& ws, const PushAction& a,
                          const PathRegion& fixed_region);

/// True when no obstacle touches the path region.
bool is_goal(const Configuration& config, const Workspace& ws);

/// Displaces every obstacle and the target by a uniform sample from a disk
/// of radius `bound`, resampling each object (up to 100 tries) until it fits.
/// Deterministic per seed. Throws NoisyInfeasible if an object cannot be placed.
Configuration apply_noise(const Configuration& config, const Workspace& ws, double bound,
                          std::uint64_t seed);

/// Persistent radii of the in-region obstacle centers crossed with
/// {up, down}, ascending radius, up first. Throws EmptyRegion.
std::vector<PushAction> available_actions(const Configuration& config, const Workspace& ws,
                                          double nu, double h);

}  // namespace topopush
