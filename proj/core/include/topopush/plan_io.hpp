#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "topopush/plan.hpp"

namespace topopush {

/// Plan text: one `push r=<radius> dir=<up|down>` line per action, then
/// `success=<true|false> actions=<k> iters=<n> seconds=<t>`. Singleton
/// pushes append ` obj=<i>`; straight pushes append ` obj=<i> goal=<x>,<y>`.
/// With report_seconds == false the seconds field is written as 0.
std::string write_plan(const Plan& plan, bool report_seconds = true);

struct ParsedPlan {
  std::vector<PushAction> actions;
  bool success = false;
  std::size_t iterations = 0;
  double seconds = 0.0;
};

/// Throws ParseError on malformed input.
ParsedPlan parse_plan(std::string_view text);
ParsedPlan load_plan_file(const std::string& path);

}  // namespace topopush
