#pragma once

#include <string>
#include <string_view>

#include "topopush/geometry.hpp"

namespace topopush {

struct Scene {
  Workspace workspace;
  Configuration config;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Parses the line-oriented scene format:
///
///     workspace <depth_x> <width_y> <arm_width> <gripper_width>
///     obstacle <x> <y> <radius>        (any number)
///     target <x> <y> <radius>          (exactly one)
///     gripper <x> <y> <heading>        (exactly one)
///
/// '#' starts a comment. Throws ParseError on malformed input and
/// InfeasibleScene when the parsed scene violates a feasibility invariant.
Scene parse_scene(std::string_view text);

/// Writes a scene in the same format; numbers use the shortest
/// representation that round-trips exactly.
std::string write_scene(const Scene& scene);

Scene load_scene_file(const std::string& path);
void save_scene_file(const std::string& path, const Scene& scene);

/// Locale-independent shortest round-trip formatting.
std::string format_double(double v);
/// Locale-independent fixed-point formatting.
std::string format_fixed(double v, int decimals);
/// Strict locale-independent parse of a full token; returns false on garbage.
bool parse_double(std::string_view token, double& out);

}  // namespace topopush
