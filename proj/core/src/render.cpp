#include "topopush/render.hpp"

#include <cmath>

#include "topopush/errors.hpp"
#include "topopush/path_region.hpp"
#include "topopush/plan.hpp"
#include "topopush/scene_io.hpp"

namespace topopush {

namespace {

constexpr double kScale = 800.0;  // pixels per meter
constexpr double kMargin = 20.0;

struct Canvas {
  const Workspace& ws;

  std::string x(double wx) const { return format_fixed(kMargin + wx * kScale, 2); }
  std::string y(double wy) const { return format_fixed(kMargin + (ws.width_y - wy) * kScale, 2); }
  std::string len(double m) const { return format_fixed(m * kScale, 2); }
};

std::string circle(const Canvas& cv, const Disk& d, const char* cls, const char* fill) {
  return "  <circle class=\"" + std::string(cls) + "\" cx=\"" + cv.x(d.center.x) + "\" cy=\"" +
         cv.y(d.center.y) + "\" r=\"" + cv.len(d.radius) + "\" fill=\"" + fill +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

std::string line(const Canvas& cv, Vec2 a, Vec2 b, const char* cls, const char* extra) {
  return "  <line class=\"" + std::string(cls) + "\" x1=\"" + cv.x(a.x) + "\" y1=\"" + cv.y(a.y) +
         "\" x2=\"" + cv.x(b.x) + "\" y2=\"" + cv.y(b.y) + "\" " + extra + "/>\n";
}

}  // namespace

std::string render_svg(const Workspace& ws, const Configuration& config,
                       const std::optional<std::vector<PushAction>>& plan, bool region_overlay) {
  const Canvas cv{ws};
  const std::string w = format_fixed(2 * kMargin + ws.depth_x * kScale, 2);
  const std::string h = format_fixed(2 * kMargin + ws.width_y * kScale, 2);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" "
         "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"navy\"/></marker></defs>\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";

  const char* wall = "stroke=\"dimgray\" stroke-width=\"6\"";
  out += line(cv, {0.0, 0.0}, {ws.depth_x, 0.0}, "wall", wall);
  out += line(cv, {ws.depth_x, 0.0}, {ws.depth_x, ws.width_y}, "wall", wall);
  out += line(cv, {0.0, ws.width_y}, {ws.depth_x, ws.width_y}, "wall", wall);

  if (region_overlay) {
    try {
      const PathRegion region = compute_path_region(config, ws);
      out += "  <polygon class=\"path-region\" points=\"";
      const auto corners = region.world_corners();
      for (std::size_t k = 0; k < corners.size(); ++k) {
        if (k) out += ' ';
        out += cv.x(corners[k].x) + "," + cv.y(corners[k].y);
      }
      out += "\" fill=\"gold\" fill-opacity=\"0.3\" stroke=\"goldenrod\" stroke-width=\"1\"/>\n";
    } catch (const NoValidRegion&) {
    }
  }

  for (const Disk& d : config.obstacles) out += circle(cv, d, "obstacle", "lightsteelblue");
  out += circle(cv, config.target, "target", "crimson");

  const Vec2 g = config.gripper.position;
  const Vec2 dir = Vec2{std::cos(config.gripper.heading), std::sin(config.gripper.heading)};
  const Vec2 tip = g + 0.04 * dir;
  out += line(cv, g, tip, "gripper", "stroke=\"darkgreen\" stroke-width=\"4\"");

  if (plan) {
    const ReplayResult replay = replay_plan(config, ws, *plan);
    const Configuration* prev = &config;
    for (std::size_t k = 0; k < replay.executed; ++k) {
      const Configuration& next = replay.states[k];
      Vec2 from, to;
      std::size_t moved = 0;
      for (std::size_t i = 0; i < next.obstacles.size(); ++i) {
        if (next.obstacles[i].center == prev->obstacles[i].center) continue;
        from = from + prev->obstacles[i].center;
        to = to + next.obstacles[i].center;
        ++moved;
      }
      if (moved) {
        const double inv = 1.0 / static_cast<double>(moved);
        out += line(cv, inv * from, inv * to, "action-arrow",
                    "stroke=\"navy\" stroke-width=\"2\" marker-end=\"url(#head)\"");
      }
      prev = &next;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace topopush
