#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "glassnet/network.hpp"

namespace glassnet {

/// Exact straight-line flow toward the region's focal point: F + (x0 - F) e^{-t}.
Vector flow(const RegionIndex& region, const Vector& x0, double t, const GlassNetwork& net);

/// First wall crossing out of a region. point[wall.coordinate] is set to the threshold
/// exactly; the other coordinates come from the closed form.
struct ExitEvent {
  Wall wall;
  double time = 0.0;
  Vector point;

  int coordinate() const { return wall.coordinate; }
  int threshold_index() const { return wall.threshold_index; }
};

/// Returns std::nullopt when no coordinate switches (the flow settles on the focal
/// point inside the region). Throws TieError for simultaneous switches and
/// SlidingWallError when x0 already sits on the threshold it is heading to.
std::optional<ExitEvent> exit_event(const RegionIndex& region, const Vector& x0,
                                    const GlassNetwork& net);

/// Region a trajectory starting at x enters. Interior points give tilde(x); a point on
/// one or more thresholds enters the unique adjacent region whose focal point lies on
/// that region's side of every such threshold. Throws AmbiguousEntryError otherwise.
RegionIndex entry_region(const Vector& x, const GlassNetwork& net);

enum class TrajectoryStatus {
  Budget,
  TimeLimit,
  InteriorEquilibrium,
  SpineConvergence,
  SimultaneousSwitch,
  WallSliding,
};

const char* to_string(TrajectoryStatus s);

struct TrajectoryEvent {
  ExitEvent exit;
  double cumulative_time = 0.0;
};

struct EventTrajectory {
  Vector start;
  RegionIndex start_region;
  std::vector<TrajectoryEvent> events;
  TrajectoryStatus status = TrajectoryStatus::Budget;
  /// Coordinates of a simultaneous switch, when status is SimultaneousSwitch.
  std::optional<std::pair<int, int>> tie;

  double total_time() const { return events.empty() ? 0.0 : events.back().cumulative_time; }
  /// Region the trajectory is in after the last event.
  RegionIndex current_region() const {
    return events.empty() ? start_region : events.back().exit.wall.to;
  }
};

struct SimulationLimits {
  std::size_t max_events = 10000;
  double t_max = kInfinity;
  /// Max-norm distance to a spine set that counts as convergence.
  double spine_tol = 1e-9;
  std::vector<Box> spines;
};

/// Event-driven simulation. Each crossing continues in the adjacent region by
/// continuous extension of that region's flow onto the wall.
EventTrajectory simulate(const GlassNetwork& net, const Vector& x0, const SimulationLimits& limits,
                         std::optional<RegionIndex> entry = std::nullopt);

}  // namespace glassnet
