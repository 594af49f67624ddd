#include "glassnet/network.hpp"

#include <algorithm>
#include <sstream>

#include "glassnet/errors.hpp"

namespace glassnet {

namespace {

std::string number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

OnWallError::OnWallError(int coordinate, int threshold_index)
    : DomainError("point lies on the wall x" + std::to_string(coordinate + 1) + " = theta_" +
                  std::to_string(coordinate + 1) + "^" + std::to_string(threshold_index + 1)),
      coordinate_(coordinate),
      threshold_index_(threshold_index) {}

MissingFocalError::MissingFocalError(RegionIndex region)
    : DomainError("no focal point for region " + region.key()), region_(std::move(region)) {}

TieError::TieError(int first, int second)
    : DomainError("simultaneous switch of x" + std::to_string(first + 1) + " and x" +
                  std::to_string(second + 1)),
      first_(first),
      second_(second) {}

SlidingWallError::SlidingWallError(RegionIndex region, int coordinate)
    : DomainError("focal point of region " + region.key() + " pushes x" +
                  std::to_string(coordinate + 1) + " back through the entry wall"),
      region_(std::move(region)),
      coordinate_(coordinate) {}

NoConvergenceError::NoConvergenceError(const std::string& what, int iterations)
    : DomainError(what + " did not converge within " + std::to_string(iterations) + " iterations"),
      iterations_(iterations) {}

const char* to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::TooShort: return "cycle too short";
    case ViolationReason::RepeatedRegion: return "repeated region";
    case ViolationReason::NonAdjacentSuccessor: return "non-adjacent successor";
    case ViolationReason::NoSwitchingCoordinate: return "no switching coordinate";
    case ViolationReason::MultipleSwitchingCoordinates: return "multiple switching coordinates";
    case ViolationReason::WrongCoordinate: return "switching coordinate does not match the wall";
    case ViolationReason::WrongDirection: return "wrong direction";
    case ViolationReason::NonTransversalWall: return "successor focal point lies behind the wall";
  }
  return "unknown";
}

CycleViolation::CycleViolation(RegionIndex region, ViolationReason reason, const std::string& detail)
    : DomainError("region " + region.key() + ": " + to_string(reason) +
                  (detail.empty() ? "" : " (" + detail + ")")),
      region_(std::move(region)),
      reason_(reason) {}

bool ThresholdLadder::strictly_increasing() const {
  return std::adjacent_find(thresholds.begin(), thresholds.end(),
                            [](double a, double b) { return !(a < b); }) == thresholds.end();
}

const char* to_string(Orientation o) { return o == Orientation::Up ? "up" : "down"; }

std::string Wall::descriptor() const {
  return "x" + std::to_string(coordinate + 1) + "@" + std::to_string(threshold_index + 1) + ":" +
         to_string(orientation);
}

std::vector<int> ISets::switching() const {
  std::vector<int> out = plus;
  out.insert(out.end(), minus.begin(), minus.end());
  std::sort(out.begin(), out.end());
  return out;
}

GlassNetwork::GlassNetwork(std::vector<ThresholdLadder> ladders, std::map<RegionIndex, Vector> focal,
                           std::vector<std::string> names)
    : ladders_(std::move(ladders)), focal_(std::move(focal)), names_(std::move(names)) {
  if (ladders_.empty()) throw InvalidNetworkError("network needs at least one variable");
  for (std::size_t i = 0; i < ladders_.size(); ++i)
    if (ladders_[i].thresholds.empty())
      throw InvalidNetworkError("variable x" + std::to_string(i + 1) + " has no thresholds");
  if (names_.empty())
    for (std::size_t i = 0; i < ladders_.size(); ++i) names_.push_back("x" + std::to_string(i + 1));
  if (names_.size() != ladders_.size())
    throw InvalidNetworkError("number of names does not match number of variables");
  for (const auto& [region, f] : focal_) {
    if (!valid_region(region))
      throw InvalidNetworkError("focal key " + region.key() + " is not a region of the network");
    if (f.size() != dimension())
      throw InvalidNetworkError("focal point of region " + region.key() + " has length " +
                                std::to_string(f.size()) + ", expected " +
                                std::to_string(dimension()));
  }
}

bool GlassNetwork::binary() const {
  return std::all_of(ladders_.begin(), ladders_.end(), [](const auto& l) { return l.size() == 1; });
}

const Vector& GlassNetwork::focal(const RegionIndex& region) const {
  const auto it = focal_.find(region);
  if (it == focal_.end()) throw MissingFocalError(region);
  return it->second;
}

bool GlassNetwork::valid_region(const RegionIndex& region) const {
  if (region.size() != ladders_.size()) return false;
  for (std::size_t i = 0; i < region.size(); ++i)
    if (region[i] < 0 || region[i] > ladders_[i].size()) return false;
  return true;
}

std::size_t GlassNetwork::region_count() const {
  std::size_t n = 1;
  for (const auto& l : ladders_) n *= static_cast<std::size_t>(l.size() + 1);
  return n;
}

std::vector<RegionIndex> GlassNetwork::regions() const {
  std::vector<RegionIndex> out;
  out.reserve(region_count());
  std::vector<int> levels(ladders_.size(), 0);
  while (true) {
    out.emplace_back(levels);
    int i = dimension() - 1;
    for (; i >= 0; --i) {
      if (++levels[static_cast<std::size_t>(i)] <= ladder(i).size()) break;
      levels[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

Interval GlassNetwork::region_interval(const RegionIndex& region, int i) const {
  const auto& l = ladder(i);
  const int level = region[static_cast<std::size_t>(i)];
  Interval out;
  if (level > 0) out.lo = l[static_cast<std::size_t>(level - 1)];
  if (level < l.size()) out.hi = l[static_cast<std::size_t>(level)];
  return out;
}

Wall GlassNetwork::wall_between(const RegionIndex& from, const RegionIndex& to) const {
  const int m = adjacent_coordinate(from, to);
  if (m < 0) throw DomainError("regions " + from.key() + " and " + to.key() + " are not adjacent");
  Wall w;
  w.from = from;
  w.to = to;
  w.coordinate = m;
  const auto mm = static_cast<std::size_t>(m);
  w.orientation = to[mm] > from[mm] ? Orientation::Up : Orientation::Down;
  w.threshold_index = std::min(from[mm], to[mm]);
  return w;
}

Box GlassNetwork::wall_closure(const Wall& wall) const {
  Box box;
  for (int i = 0; i < dimension(); ++i) {
    if (i == wall.coordinate) {
      const double t = threshold(i, wall.threshold_index);
      box.intervals.push_back({t, t});
    } else {
      box.intervals.push_back(region_interval(wall.from, i));
    }
  }
  return box;
}

int level_of(double x, const ThresholdLadder& ladder) {
  int level = 0;
  for (double t : ladder.thresholds) {
    if (x == t) return -1;
    if (t < x) ++level;
  }
  return level;
}

RegionIndex tilde(const Vector& x, const GlassNetwork& net) {
  if (x.size() != net.dimension())
    throw DomainError("point has dimension " + std::to_string(x.size()) + ", expected " +
                      std::to_string(net.dimension()));
  std::vector<int> levels(static_cast<std::size_t>(net.dimension()));
  for (int i = 0; i < net.dimension(); ++i) {
    const auto& l = net.ladder(i);
    for (int j = 0; j < l.size(); ++j)
      if (x[i] == l[static_cast<std::size_t>(j)]) throw OnWallError(i, j);
    levels[static_cast<std::size_t>(i)] = level_of(x[i], l);
  }
  return RegionIndex(std::move(levels));
}

ValidationReport validate(const GlassNetwork& net, FocalCoverage coverage) {
  ValidationReport report;
  for (int i = 0; i < net.dimension(); ++i)
    if (!net.ladder(i).strictly_increasing())
      report.violations.push_back("variable " + net.name(i) + ": thresholds not strictly increasing");

  for (const auto& [region, f] : net.focal_points()) {
    for (int i = 0; i < net.dimension(); ++i) {
      const auto& l = net.ladder(i);
      for (int j = 0; j < l.size(); ++j) {
        if (f[i] == l[static_cast<std::size_t>(j)])
          report.violations.push_back("region " + region.key() + ": focal coordinate " +
                                      net.name(i) + " equals threshold theta_" +
                                      std::to_string(i + 1) + "^" + std::to_string(j + 1) + " = " +
                                      number(f[i]));
      }
    }
  }

  if (coverage == FocalCoverage::Total)
    for (const auto& r : net.regions())
      if (!net.has_focal(r)) report.violations.push_back("region " + r.key() + ": missing focal point");
  return report;
}

ISets i_sets(const RegionIndex& region, const GlassNetwork& net) {
  const RegionIndex target = tilde(net.focal(region), net);
  ISets s;
  for (int i = 0; i < net.dimension(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (target[k] > region[k])
      s.plus.push_back(i);
    else if (target[k] < region[k])
      s.minus.push_back(i);
    else
      s.zero.push_back(i);
  }
  return s;
}

std::size_t TransitionGraph::index_of(const RegionIndex& region) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), region);
  if (it == nodes.end() || *it != region) throw DomainError("region " + region.key() + " not in graph");
  return static_cast<std::size_t>(it - nodes.begin());
}

std::size_t TransitionGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : successors) n += s.size();
  return n;
}

TransitionGraph state_transition_graph(const GlassNetwork& net) {
  TransitionGraph g;
  g.nodes = net.regions();
  g.successors.resize(g.nodes.size());
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const auto& region = g.nodes[k];
    const ISets s = i_sets(region, net);
    for (int i : s.switching()) {
      const bool up = std::find(s.plus.begin(), s.plus.end(), i) != s.plus.end();
      g.successors[k].push_back(g.index_of(region.stepped(static_cast<std::size_t>(i), up ? 1 : -1)));
    }
  }
  return g;
}

}  // namespace glassnet
