#include "topopush/plan_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "topopush/errors.hpp"
#include "topopush/scene_io.hpp"

namespace topopush {

std::string write_plan(const Plan& plan, bool report_seconds) {
  std::string out;
  for (const PushAction& a : plan.actions) {
    out += "push r=" + format_double(a.radius) + " dir=" + to_string(a.direction);
    if (a.kind != PushKind::Cluster) out += " obj=" + std::to_string(a.obstacle);
    if (a.kind == PushKind::Straight) {
      out += " goal=" + format_double(a.goal.x) + "," + format_double(a.goal.y);
    }
    out += "\n";
  }
  out += std::string("success=") + (plan.success ? "true" : "false") +
         " actions=" + std::to_string(plan.actions.size()) +
         " iters=" + std::to_string(plan.stats.iterations) +
         " seconds=" + format_fixed(report_seconds ? plan.stats.seconds : 0.0, 6) + "\n";
  return out;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::string_view> value_of(std::string_view tok, std::string_view key) {
  if (tok.size() > key.size() && tok.substr(0, key.size()) == key && tok[key.size()] == '=') {
    return tok.substr(key.size() + 1);
  }
  return std::nullopt;
}

std::size_t parse_count(std::string_view s, int line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

double parse_number(std::string_view s, int line) {
  double v = 0.0;
  if (!parse_double(s, v)) throw ParseError(line, "bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

ParsedPlan parse_plan(std::string_view text) {
  ParsedPlan plan;
  bool summary_seen = false;
  std::size_t declared = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (summary_seen) throw ParseError(line_no, "content after the summary line");

    if (tok[0] == "push") {
      PushAction a;
      bool have_r = false, have_dir = false, have_obj = false, have_goal = false;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        if (auto v = value_of(tok[k], "r")) {
          a.radius = parse_number(*v, line_no);
          have_r = true;
        } else if (auto v = value_of(tok[k], "dir")) {
          if (*v == "up") a.direction = Direction::Up;
          else if (*v == "down") a.direction = Direction::Down;
          else throw ParseError(line_no, "dir must be up or down");
          have_dir = true;
        } else if (auto v = value_of(tok[k], "obj")) {
          a.obstacle = parse_count(*v, line_no);
          have_obj = true;
        } else if (auto v = value_of(tok[k], "goal")) {
          const auto comma = v->find(',');
          if (comma == std::string_view::npos) throw ParseError(line_no, "goal must be x,y");
          a.goal = {parse_number(v->substr(0, comma), line_no), parse_number(v->substr(comma + 1), line_no)};
          have_goal = true;
        } else {
          throw ParseError(line_no, "unknown field '" + std::string(tok[k]) + "'");
        }
      }
      if (!have_r || !have_dir) throw ParseError(line_no, "push needs r= and dir=");
      if (have_goal && !have_obj) throw ParseError(line_no, "goal= requires obj=");
      a.kind = have_goal ? PushKind::Straight : have_obj ? PushKind::Singleton : PushKind::Cluster;
      plan.actions.push_back(a);
    } else {
      bool have_success = false;
      for (const auto t : tok) {
        if (auto v = value_of(t, "success")) {
          if (*v == "true") plan.success = true;
          else if (*v == "false") plan.success = false;
          else throw ParseError(line_no, "success must be true or false");
          have_success = true;
        } else if (auto v = value_of(t, "actions")) {
          declared = parse_count(*v, line_no);
        } else if (auto v = value_of(t, "iters")) {
          plan.iterations = parse_count(*v, line_no);
        } else if (auto v = value_of(t, "seconds")) {
          plan.seconds = parse_number(*v, line_no);
        } else {
          throw ParseError(line_no, "unknown field '" + std::string(t) + "'");
        }
      }
      if (!have_success) throw ParseError(line_no, "expected a push line or the summary line");
      summary_seen = true;
    }
  }
  if (!summary_seen) throw ParseError(line_no, "missing summary line");
  if (declared != plan.actions.size()) {
    throw ParseError(line_no, "summary declares " + std::to_string(declared) + " actions, found " +
                                  std::to_string(plan.actions.size()));
  }
  return plan;
}

ParsedPlan load_plan_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open plan file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_plan(ss.str());
}

}  // namespace topopush
