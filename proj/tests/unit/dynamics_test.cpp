#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "glassnet/dynamics.hpp"
#include "glassnet/errors.hpp"
#include "oracles.hpp"

using namespace glassnet;
using glassnet::testing::fixture;
using glassnet::testing::max_abs;
using glassnet::testing::vec;

TEST(Flow, ClosedFormExamples) {
  const auto a = fixture("net_a");
  EXPECT_LT(max_abs(flow({1, 0}, vec({0, -1}), std::log(2.0), a) - vec({0.5, 0})), 1e-15);
  const auto b = fixture("net_b");
  EXPECT_LT(max_abs(flow({0, 0}, vec({-1, -0.5}), std::log(2.0), b) - vec({0, -1.25})), 1e-15);
  EXPECT_EQ(flow({0, 0}, vec({-1, -0.5}), 0.0, b), vec({-1, -0.5}));
}

TEST(Flow, MatchesRungeKutta) {
  const auto c = fixture("net_c");
  std::mt19937_64 rng(11);
  for (const auto& r : c.regions()) {
    const Vector x0 = glassnet::testing::random_point(c, r, rng);
    const Vector expected = glassnet::testing::rk4(c.focal(r), x0, 0.7, 2000);
    EXPECT_LT(max_abs(flow(r, x0, 0.7, c) - expected), 1e-12);
  }
}

TEST(Flow, Semigroup) {
  const auto f = fixture("net_f");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> t(0.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const RegionIndex r = f.regions()[static_cast<std::size_t>(k) % f.region_count()];
    const Vector x0 = glassnet::testing::random_point(f, r, rng);
    const double s = t(rng), u = t(rng);
    const Vector lhs = flow(r, x0, s + u, f);
    const Vector rhs = flow(r, flow(r, x0, s, f), u, f);
    EXPECT_LE(max_abs(lhs - rhs), 1e-12 * std::max(1.0, max_abs(lhs)));
  }
}

TEST(ExitEvent, Examples) {
  const auto b = fixture("net_b");
  const auto e = exit_event({0, 0}, vec({-1, -0.5}), b);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->coordinate(), 0);
  EXPECT_NEAR(e->time, std::log(2.0), 1e-15);
  EXPECT_EQ(e->point[0], 0.0);
  EXPECT_NEAR(e->point[1], -1.25, 1e-15);
  EXPECT_EQ(e->wall.to, (RegionIndex{1, 0}));

  const auto a = fixture("net_a");
  const auto ea = exit_event({1, 0}, vec({0, -1}), a);
  ASSERT_TRUE(ea);
  EXPECT_EQ(ea->coordinate(), 1);
  EXPECT_NEAR(ea->time, std::log(2.0), 1e-15);
  EXPECT_NEAR(ea->point[0], 0.5, 1e-15);
  EXPECT_EQ(ea->point[1], 0.0);
}

TEST(ExitEvent, NoExitWhenFocalInsideRegion) {
  EXPECT_FALSE(exit_event(RegionIndex{0}, vec({-0.5}), fixture("equilibrium_1d")));
}

TEST(ExitEvent, TieIsReported) {
  const GlassNetwork tie({ThresholdLadder{{0}}, ThresholdLadder{{0}}},
                         {{RegionIndex{0, 0}, vec({1, 1})}});
  try {
    exit_event({0, 0}, vec({-1, -1}), tie);
    FAIL() << "expected TieError";
  } catch (const TieError& e) {
    EXPECT_EQ(e.first(), 0);
    EXPECT_EQ(e.second(), 1);
  }
}

TEST(ExitEvent, LaterSmallerCandidateBeatsEarlierTie) {
  // x1 and x2 tie, x3 exits first
  const GlassNetwork net({ThresholdLadder{{0}}, ThresholdLadder{{0}}, ThresholdLadder{{0}}},
                         {{RegionIndex{0, 0, 0}, vec({1, 1, 1})}});
  const auto e = exit_event({0, 0, 0}, vec({-1, -1, -0.5}), net);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->coordinate(), 2);
}

TEST(ExitEvent, MultiLevelJumpCrossesAdjacentThreshold) {
  const auto c = fixture("net_c");
  const auto e = exit_event({0, 0}, vec({-1, -1}), c);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->wall.to, (RegionIndex{1, 0}));
  EXPECT_NEAR(e->time, std::log(1.5), 1e-15);
}

TEST(ExitEvent, ExitPointOnThresholdAndInsideClosure) {
  for (const char* name : {"net_c", "net_f", "net_d"}) {
    const auto net = fixture(name);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
      const RegionIndex r = net.regions()[static_cast<std::size_t>(k) % net.region_count()];
      const Vector x0 = glassnet::testing::random_point(net, r, rng);
      std::optional<ExitEvent> e;
      try {
        e = exit_event(r, x0, net);
      } catch (const TieError&) {
        continue;
      }
      if (!e) continue;
      const double theta = net.threshold(e->coordinate(), e->threshold_index());
      const Vector y = flow(r, x0, e->time, net);
      EXPECT_NEAR(y[e->coordinate()], theta, 1e-12 * std::max(1.0, std::abs(theta)));
      EXPECT_GT(e->time, 0.0);
      for (int i = 0; i < net.dimension(); ++i) {
        if (i == e->coordinate()) continue;
        const Interval iv = net.region_interval(r, i);
        EXPECT_GT(y[i], iv.lo);
        EXPECT_LT(y[i], iv.hi);
      }
    }
  }
}

TEST(EntryRegion, ContinuousExtension) {
  const auto b = fixture("net_b");
  EXPECT_EQ(entry_region(vec({-1, 0}), b), (RegionIndex{0, 0}));
  EXPECT_EQ(entry_region(vec({-1, -1}), b), (RegionIndex{0, 0}));
}

TEST(Simulate, NetAWallMagnitudesAndTimes) {
  const auto a = fixture("net_a");
  SimulationLimits limits;
  limits.max_events = 1000;
  const auto traj = simulate(a, vec({0, -1}), limits, RegionIndex{1, 0});
  ASSERT_EQ(traj.events.size(), 1000u);
  EXPECT_EQ(traj.status, TrajectoryStatus::Budget);
  double b = 1.0;
  for (std::size_t k = 0; k < traj.events.size(); ++k) {
    const auto [next, dt] = glassnet::testing::quarter_turn(1, 1, b);
    b = next;
    const double N = static_cast<double>(k + 1);
    EXPECT_NEAR(max_abs(traj.events[k].exit.point), 1.0 / (1.0 + N), 1e-12);
    EXPECT_NEAR(traj.events[k].cumulative_time, std::log(N + 1.0), 1e-9);
    EXPECT_NEAR(max_abs(traj.events[k].exit.point), b, 1e-12);
  }
  EXPECT_NEAR(max_abs(traj.events[399].exit.point), 1.0 / 401.0, 1e-12);
}

TEST(Simulate, NetBIsExactlyPeriodic) {
  const auto b = fixture("net_b");
  SimulationLimits limits;
  limits.max_events = 40;
  const auto traj = simulate(b, vec({-1, 0}), limits);
  EXPECT_EQ(traj.start_region, (RegionIndex{0, 0}));
  for (std::size_t lap = 1; lap <= 10; ++lap) {
    const auto& e = traj.events[4 * lap - 1];
    EXPECT_LT(max_abs(e.exit.point - vec({-1, 0})), 1e-12);
    EXPECT_NEAR(e.cumulative_time, static_cast<double>(lap) * std::log(16.0), 1e-9);
  }
}

TEST(Simulate, NetBMatchesQuarterTurnOracle) {
  const auto b = fixture("net_b");
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> d(0.01, 3.0);
  SimulationLimits limits;
  limits.max_events = 8;
  for (int k = 0; k < 100; ++k) {
    double mag = d(rng);
    const auto traj = simulate(b, vec({-mag, 0}), limits);
    double t = 0.0;
    for (const auto& e : traj.events) {
      const auto [next, dt] = glassnet::testing::quarter_turn(1, 2, mag);
      mag = next;
      t += dt;
      EXPECT_NEAR(max_abs(e.exit.point), mag, 1e-10);
      EXPECT_NEAR(e.cumulative_time, t, 1e-10);
    }
  }
}

TEST(Simulate, NetEConvergesToSpineInFiniteTime) {
  const auto e = fixture("net_e");
  SimulationLimits limits;
  limits.spines.push_back(Box{{Interval{0, 0}, Interval{0, 0}}});
  const auto traj = simulate(e, vec({-1, 0}), limits);
  EXPECT_EQ(traj.status, TrajectoryStatus::SpineConvergence);
  EXPECT_TRUE(std::isfinite(traj.total_time()));
  // sum of ln(1 + b/2) over the geometric magnitudes
  EXPECT_LT(traj.total_time(), 2.0);
}

TEST(Simulate, CumulativeTimesIncreaseAndRegionsConnect) {
  const auto c = fixture("net_c");
  SimulationLimits limits;
  limits.max_events = 300;
  const auto traj = simulate(c, vec({-0.5, -0.5}), limits);
  RegionIndex region = traj.start_region;
  double t = 0.0;
  for (const auto& e : traj.events) {
    EXPECT_GT(e.cumulative_time, t);
    EXPECT_EQ(e.exit.wall.from, region);
    EXPECT_NE(adjacent_coordinate(e.exit.wall.from, e.exit.wall.to), -1);
    t = e.cumulative_time;
    region = e.exit.wall.to;
  }
}

TEST(Simulate, StatusKinds) {
  const auto eq = fixture("equilibrium_1d");
  const auto settle = simulate(eq, vec({0.5}), {});
  EXPECT_EQ(settle.status, TrajectoryStatus::InteriorEquilibrium);
  ASSERT_EQ(settle.events.size(), 1u);
  EXPECT_EQ(settle.current_region(), RegionIndex{0});

  SimulationLimits limits;
  limits.t_max = 5.0;
  const auto timed = simulate(fixture("net_b"), vec({-1, 0}), limits);
  EXPECT_EQ(timed.status, TrajectoryStatus::TimeLimit);
  EXPECT_LE(timed.total_time(), 5.0);

  const GlassNetwork tie({ThresholdLadder{{0}}, ThresholdLadder{{0}}},
                         {{RegionIndex{0, 0}, vec({1, 1})}});
  const auto sw = simulate(tie, vec({-1, -1}), {});
  EXPECT_EQ(sw.status, TrajectoryStatus::SimultaneousSwitch);
  ASSERT_TRUE(sw.tie);
  EXPECT_EQ(*sw.tie, std::make_pair(0, 1));
}

TEST(Simulate, MissingFocalAborts) {
  const GlassNetwork sparse({ThresholdLadder{{0}}}, {{RegionIndex{0}, vec({1})}});
  EXPECT_THROW(simulate(sparse, vec({-1}), {}), MissingFocalError);
}
