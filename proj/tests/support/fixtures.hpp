#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "topopush/bench.hpp"
#include "topopush/geometry.hpp"
#include "topopush/random.hpp"

namespace fixture {

using namespace topopush;

inline constexpr double kR = 0.035;

// Gripper at the open face in line with the target.
inline Configuration shelf(std::initializer_list<Vec2> obstacles, Vec2 target = {0.6, 0.35}, double r = kR) {
  Configuration c;
  for (const Vec2 p : obstacles) c.obstacles.push_back({p, r});
  c.target = {target, r};
  c.gripper = {{0.0, target.y}, 0.0};
  return c;
}

inline std::vector<Vec2> random_points(Rng& rng, std::size_t n, double extent) {
  std::vector<Vec2> out(n);
  for (auto& p : out) p = {rng.uniform(0.0, extent), rng.uniform(0.0, extent)};
  return out;
}

// Generated benchmark scene with a varied obstacle count.
inline Scene random_scene(std::uint64_t seed, std::size_t obstacles = 7) {
  SceneSpec spec;
  spec.seed = seed;
  spec.obstacle_count = obstacles;
  return generate_scene(spec);
}

}  // namespace fixture
