#include "topopush/scene_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "topopush/errors.hpp"

namespace topopush {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_fixed(double v, int decimals) {
  std::array<char, 128> buf{};
  auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  std::string s(buf.data(), ptr);
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

bool parse_double(std::string_view token, double& out) {
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size() && std::isfinite(out);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <std::size_t N>
std::array<double, N> numbers(const std::vector<std::string_view>& fields, int line_no) {
  if (fields.size() != N + 1) {
    throw ParseError(line_no, "'" + std::string(fields[0]) + "' expects " + std::to_string(N) +
                                  " numbers, got " + std::to_string(fields.size() - 1));
  }
  std::array<double, N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    if (!parse_double(fields[k + 1], out[k])) {
      throw ParseError(line_no, "bad number '" + std::string(fields[k + 1]) + "'");
    }
  }
  return out;
}

}  // namespace

Scene parse_scene(std::string_view text) {
  std::optional<Workspace> ws;
  std::optional<Disk> target;
  std::optional<GripperPose> gripper;
  std::vector<Disk> obstacles;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const std::string_view kind = fields[0];
    if (!ws && kind != "workspace") {
      throw ParseError(line_no, "first entry must be 'workspace'");
    }
    if (kind == "workspace") {
      if (ws) throw ParseError(line_no, "duplicate 'workspace'");
      const auto v = numbers<4>(fields, line_no);
      ws = Workspace{v[0], v[1], v[2], v[3]};
    } else if (kind == "obstacle") {
      const auto v = numbers<3>(fields, line_no);
      obstacles.push_back({{v[0], v[1]}, v[2]});
    } else if (kind == "target") {
      if (target) throw ParseError(line_no, "duplicate 'target'");
      const auto v = numbers<3>(fields, line_no);
      target = Disk{{v[0], v[1]}, v[2]};
    } else if (kind == "gripper") {
      if (gripper) throw ParseError(line_no, "duplicate 'gripper'");
      const auto v = numbers<3>(fields, line_no);
      gripper = GripperPose{{v[0], v[1]}, v[2]};
    } else {
      throw ParseError(line_no, "unknown entry '" + std::string(kind) + "'");
    }
    if (end == text.size()) break;
  }

  if (!ws) throw ParseError(line_no, "missing 'workspace' line");
  if (!target) throw ParseError(line_no, "missing 'target' line");
  if (!gripper) throw ParseError(line_no, "missing 'gripper' line");

  Scene scene{*ws, Configuration{std::move(obstacles), *target, *gripper}};
  if (!scene.workspace.valid()) throw InfeasibleScene("workspace dimensions are invalid");
  if (!is_feasible(scene.config, scene.workspace)) {
    throw InfeasibleScene("objects overlap or leave the workspace");
  }
  return scene;
}

std::string write_scene(const Scene& scene) {
  const auto& ws = scene.workspace;
  const auto& c = scene.config;
  std::string out;
  out += "workspace " + format_double(ws.depth_x) + " " + format_double(ws.width_y) + " " +
         format_double(ws.arm_width) + " " + format_double(ws.gripper_width) + "\n";
  for (const auto& d : c.obstacles) {
    out += "obstacle " + format_double(d.center.x) + " " + format_double(d.center.y) + " " +
           format_double(d.radius) + "\n";
  }
  out += "target " + format_double(c.target.center.x) + " " + format_double(c.target.center.y) +
         " " + format_double(c.target.radius) + "\n";
  out += "gripper " + format_double(c.gripper.position.x) + " " +
         format_double(c.gripper.position.y) + " " + format_double(c.gripper.heading) + "\n";
  return out;
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open scene file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

void save_scene_file(const std::string& path, const Scene& scene) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << write_scene(scene);
}

}  // namespace topopush
