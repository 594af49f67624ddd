#include "glassnet/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "glassnet/errors.hpp"

namespace glassnet {

Vector flow(const RegionIndex& region, const Vector& x0, double t, const GlassNetwork& net) {
  const Vector& f = net.focal(region);
  if (t == 0.0) return x0;
  return f + (x0 - f) * std::exp(-t);
}

std::optional<ExitEvent> exit_event(const RegionIndex& region, const Vector& x0,
                                    const GlassNetwork& net) {
  const Vector& f = net.focal(region);
  const ISets sets = i_sets(region, net);
  const std::vector<int> candidates = sets.switching();
  if (candidates.empty()) return std::nullopt;

  // Candidate times compare through the ratio (f - x0) / (f - theta) = e^t.
  int best = -1;
  int tied = -1;
  double best_ratio = 0.0;
  double best_threshold = 0.0;
  int best_index = 0;
  bool up_best = true;
  for (int i : candidates) {
    const auto k = static_cast<std::size_t>(i);
    const bool up = std::find(sets.plus.begin(), sets.plus.end(), i) != sets.plus.end();
    const int j = up ? region[k] : region[k] - 1;
    const double theta = net.threshold(i, j);
    const double ratio = (f[i] - x0[i]) / (f[i] - theta);
    if (!(ratio > 1.0)) throw SlidingWallError(region, i);
    if (best < 0 || ratio < best_ratio) {
      best = i;
      tied = -1;
      best_ratio = ratio;
      best_threshold = theta;
      best_index = j;
      up_best = up;
    } else if (ratio == best_ratio) {
      tied = i;
    }
  }
  if (tied >= 0) throw TieError(best, tied);

  ExitEvent ev;
  ev.wall.from = region;
  ev.wall.to = region.stepped(static_cast<std::size_t>(best), up_best ? 1 : -1);
  ev.wall.coordinate = best;
  ev.wall.threshold_index = best_index;
  ev.wall.orientation = up_best ? Orientation::Up : Orientation::Down;
  ev.time = std::log(best_ratio);
  ev.point = f + (x0 - f) / best_ratio;
  ev.point[best] = best_threshold;
  return ev;
}

RegionIndex entry_region(const Vector& x, const GlassNetwork& net) {
  if (x.size() != net.dimension())
    throw DomainError("start point has dimension " + std::to_string(x.size()) + ", expected " +
                      std::to_string(net.dimension()));
  std::vector<int> base(static_cast<std::size_t>(net.dimension()));
  std::vector<std::pair<int, int>> on_threshold;  // (coordinate, threshold index)
  for (int i = 0; i < net.dimension(); ++i) {
    const int level = level_of(x[i], net.ladder(i));
    if (level >= 0) {
      base[static_cast<std::size_t>(i)] = level;
      continue;
    }
    int j = 0;
    while (net.threshold(i, j) != x[i]) ++j;
    on_threshold.emplace_back(i, j);
    base[static_cast<std::size_t>(i)] = j;
  }
  if (on_threshold.empty()) return RegionIndex(std::move(base));

  std::vector<RegionIndex> consistent;
  const std::size_t combos = std::size_t{1} << on_threshold.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<int> levels = base;
    for (std::size_t b = 0; b < on_threshold.size(); ++b)
      if (mask & (std::size_t{1} << b)) ++levels[static_cast<std::size_t>(on_threshold[b].first)];
    RegionIndex candidate(std::move(levels));
    if (!net.has_focal(candidate)) continue;
    const Vector& f = net.focal(candidate);
    bool ok = true;
    for (std::size_t b = 0; b < on_threshold.size() && ok; ++b) {
      const auto [i, j] = on_threshold[b];
      const bool above = (mask & (std::size_t{1} << b)) != 0;
      const double theta = net.threshold(i, j);
      ok = above ? f[i] > theta : f[i] < theta;
    }
    if (ok) consistent.push_back(std::move(candidate));
  }
  if (consistent.size() != 1)
    throw AmbiguousEntryError("start point on a wall has " + std::to_string(consistent.size()) +
                              " candidate entry regions");
  return consistent.front();
}

const char* to_string(TrajectoryStatus s) {
  switch (s) {
    case TrajectoryStatus::Budget: return "Budget";
    case TrajectoryStatus::TimeLimit: return "TimeLimit";
    case TrajectoryStatus::InteriorEquilibrium: return "InteriorEquilibrium";
    case TrajectoryStatus::SpineConvergence: return "SpineConvergence";
    case TrajectoryStatus::SimultaneousSwitch: return "SimultaneousSwitch";
    case TrajectoryStatus::WallSliding: return "WallSliding";
  }
  return "Unknown";
}

namespace {

bool near_spine(const Vector& x, const SimulationLimits& limits) {
  return std::any_of(limits.spines.begin(), limits.spines.end(),
                     [&](const Box& s) { return s.distance(x) < limits.spine_tol; });
}

}  // namespace

EventTrajectory simulate(const GlassNetwork& net, const Vector& x0, const SimulationLimits& limits,
                         std::optional<RegionIndex> entry) {
  EventTrajectory traj;
  traj.start = x0;
  traj.start_region = entry ? *entry : entry_region(x0, net);
  if (!net.valid_region(traj.start_region))
    throw DomainError("entry region " + traj.start_region.key() + " is not a region of the network");

  if (near_spine(x0, limits)) {
    traj.status = TrajectoryStatus::SpineConvergence;
    return traj;
  }

  RegionIndex region = traj.start_region;
  Vector x = x0;
  double elapsed = 0.0;
  while (true) {
    if (traj.events.size() >= limits.max_events) {
      traj.status = TrajectoryStatus::Budget;
      return traj;
    }
    std::optional<ExitEvent> ev;
    try {
      ev = exit_event(region, x, net);
    } catch (const TieError& tie) {
      traj.status = TrajectoryStatus::SimultaneousSwitch;
      traj.tie = std::make_pair(tie.first(), tie.second());
      return traj;
    } catch (const SlidingWallError&) {
      traj.status = TrajectoryStatus::WallSliding;
      return traj;
    }
    if (!ev) {
      traj.status = TrajectoryStatus::InteriorEquilibrium;
      return traj;
    }
    if (elapsed + ev->time > limits.t_max) {
      traj.status = TrajectoryStatus::TimeLimit;
      return traj;
    }
    elapsed += ev->time;
    region = ev->wall.to;
    x = ev->point;
    traj.events.push_back({std::move(*ev), elapsed});
    if (near_spine(x, limits)) {
      traj.status = TrajectoryStatus::SpineConvergence;
      return traj;
    }
  }
}

}  // namespace glassnet
