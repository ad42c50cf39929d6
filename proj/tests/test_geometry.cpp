#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "topopush/geometry.hpp"
#include "topopush/random.hpp"

using namespace topopush;

TEST(Feasibility, DisksJustApartAreFeasible) {
  const Workspace ws;
  auto c = fixture::shelf({{0.3, 0.3}, {0.3, 0.38}});
  EXPECT_TRUE(is_feasible(c, ws));
}

TEST(Feasibility, OverlappingDisksAreInfeasible) {
  const Workspace ws;
  auto c = fixture::shelf({{0.3, 0.3}, {0.3, 0.36}});
  EXPECT_FALSE(is_feasible(c, ws));
}

TEST(Feasibility, DiskThroughSouthWall) {
  const Workspace ws;
  auto c = fixture::shelf({{0.3, 0.02}});
  EXPECT_FALSE(is_feasible(c, ws));
}

TEST(Feasibility, TargetOverlapAndBackWall) {
  const Workspace ws;
  EXPECT_FALSE(is_feasible(fixture::shelf({{0.55, 0.35}}), ws));
  EXPECT_FALSE(is_feasible(fixture::shelf({}, {0.78, 0.35}), ws));
  // the open face is not a wall
  EXPECT_TRUE(disk_within_walls({{0.01, 0.35}, 0.035}, ws));
}

TEST(Feasibility, TouchingDisksAreFeasible) {
  const Workspace ws;
  auto c = fixture::shelf({{0.3, 0.3}, {0.3, 0.37}});
  EXPECT_TRUE(is_feasible(c, ws));
}

TEST(DiskRect, SpecExamples) {
  const Disk d{{0.5, 0.5}, 0.05};
  EXPECT_FALSE(disk_rect_intersect(d, {0.0, 0.4, 0.0, 1.0}));
  EXPECT_TRUE(disk_rect_intersect(d, {0.0, 0.46, 0.0, 1.0}));
  EXPECT_TRUE(disk_rect_intersect(d, {0.4, 0.6, 0.4, 0.6}));
}

TEST(DiskRect, TangentIsClosed) {
  EXPECT_TRUE(disk_rect_intersect({{0.5, 0.5}, 0.25}, {0.0, 0.25, 0.0, 1.0}));
}

TEST(DiskRect, AgreesWithSamplingOracle) {
  Rng rng(11);
  int compared = 0;
  for (int k = 0; k < 1000; ++k) {
    const Disk d{{rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 2.0)}, rng.uniform(0.01, 0.5)};
    double x0 = rng.uniform(0.0, 1.0), x1 = rng.uniform(0.0, 1.0);
    double y0 = rng.uniform(0.0, 1.0), y1 = rng.uniform(0.0, 1.0);
    const Rect r{std::min(x0, x1), std::max(x0, x1), std::min(y0, y1), std::max(y0, y1)};
    // skip near-tangent cases where boundary sampling cannot decide
    const Disk inner{d.center, d.radius - 1e-6}, outer{d.center, d.radius + 1e-6};
    const bool lo = oracle::sampled_disk_rect(inner, r);
    const bool hi = oracle::sampled_disk_rect(outer, r);
    if (lo != hi) continue;
    ++compared;
    EXPECT_EQ(disk_rect_intersect(d, r), lo) << "case " << k;
  }
  EXPECT_GT(compared, 990);
}

TEST(Rotate, QuarterTurn) {
  const Vec2 p = rotate_about({1.0, 0.0}, {0.0, 0.0}, std::numbers::pi / 2.0);
  EXPECT_NEAR(p.x, 0.0, 1e-15);
  EXPECT_NEAR(p.y, 1.0, 1e-15);
}

TEST(Rotate, ZeroAngleAndPivotAreFixed) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Vec2 p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec2 q{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    EXPECT_EQ(rotate_about(p, q, 0.0), p);
  }
  EXPECT_EQ(rotate_about({0.6, 0.2}, {0.6, 0.2}, 1.3), (Vec2{0.6, 0.2}));
}

TEST(Rotate, PreservesPivotDistance) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const Vec2 p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Vec2 pivot{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double before = oracle::dist(p, pivot);
    const double after = oracle::dist(rotate_about(p, pivot, rng.uniform(-7, 7)), pivot);
    EXPECT_LE(std::abs(after - before), 1e-12 * std::max(before, 1e-300)) << k;
  }
}

TEST(Segment, Distances) {
  EXPECT_DOUBLE_EQ(point_segment_distance({0.5, 1.0}, {0.0, 0.0}, {1.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({3.0, 4.0}, {0.0, 0.0}, {0.0, 0.0}), 5.0);
}
