#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "topopush/baselines.hpp"
#include "topopush/errors.hpp"
#include "topopush/plan_io.hpp"

using namespace topopush;

TEST(PlanText, Format) {
  Plan p;
  PushAction a;
  a.radius = 0.062;
  a.direction = Direction::Down;
  p.actions.push_back(a);
  p.success = true;
  p.stats.iterations = 17;
  p.stats.seconds = 1.5;
  EXPECT_EQ(write_plan(p), "push r=0.062 dir=down\nsuccess=true actions=1 iters=17 seconds=1.500000\n");
  EXPECT_EQ(write_plan(p, false), "push r=0.062 dir=down\nsuccess=true actions=1 iters=17 seconds=0.000000\n");
}

TEST(PlanText, RoundTripEveryKind) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Scene s = fixture::random_scene(seed);
    for (const Method m : all_methods()) {
      PlannerParams params;
      params.seed = seed;
      const Plan p = run_planner(m, s.config, s.workspace, params);
      const ParsedPlan back = parse_plan(write_plan(p));
      EXPECT_EQ(back.actions, p.actions) << method_name(m);
      EXPECT_EQ(back.success, p.success);
      EXPECT_EQ(back.iterations, p.stats.iterations);
    }
  }
}

TEST(PlanText, Malformed) {
  auto line_of = [](const char* text) {
    try {
      parse_plan(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("push r=0.05 dir=sideways\nsuccess=true actions=1 iters=1 seconds=0\n"), 1);
  EXPECT_EQ(line_of("push r=abc dir=up\n"), 1);
  EXPECT_EQ(line_of("push dir=up\n"), 1);
  EXPECT_EQ(line_of("push r=0.05 dir=up goal=0.1,0.2\n"), 1);
  EXPECT_EQ(line_of("push r=0.05 dir=up\n\nsuccess=maybe actions=1\n"), 3);
  EXPECT_EQ(line_of("push r=0.05 dir=up\nsuccess=true actions=2 iters=1 seconds=0\n"), 2);
  EXPECT_EQ(line_of("push r=0.05 dir=up\n"), 1);
  EXPECT_EQ(line_of("success=true actions=0 iters=0 seconds=0\npush r=0.05 dir=up\n"), 2);
  EXPECT_THROW(load_plan_file("/nonexistent/plan.txt"), ParseError);
}
