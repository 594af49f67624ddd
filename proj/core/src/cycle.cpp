#include "glassnet/cycle.hpp"

#include <algorithm>
#include <set>

#include "glassnet/errors.hpp"

namespace glassnet {

Wall CycleSpec::wall(const GlassNetwork& net, std::size_t i) const {
  return net.wall_between(predecessor(i), region(i));
}

std::vector<Wall> CycleSpec::walls(const GlassNetwork& net) const {
  std::vector<Wall> out;
  out.reserve(regions.size());
  for (std::size_t i = 0; i < regions.size(); ++i) out.push_back(wall(net, i));
  return out;
}

std::string CycleSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (i) out += '>';
    out += regions[i].compact();
  }
  return out;
}

CycleSpec CycleSpec::parse(std::string_view text) {
  CycleSpec c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('>', pos), text.size());
    c.regions.push_back(RegionIndex::parse_key(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  for (const auto& r : c.regions)
    if (r.size() != c.regions.front().size()) throw ParseError("cycle regions differ in dimension");
  return c;
}

CycleCertificate verify_cyclic_attractor(const GlassNetwork& net, const CycleSpec& cycle) {
  if (cycle.size() < 2)
    throw CycleViolation(cycle.size() ? cycle.regions[0] : RegionIndex{}, ViolationReason::TooShort, "");
  {
    std::set<RegionIndex> seen;
    for (const auto& r : cycle.regions) {
      if (!net.valid_region(r))
        throw DomainError("region " + r.key() + " is not a region of the network");
      if (!seen.insert(r).second) throw CycleViolation(r, ViolationReason::RepeatedRegion, "");
    }
  }

  CycleCertificate cert;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const RegionIndex& here = cycle.region(i);
    const RegionIndex& next = cycle.region(i + 1);
    const int m = adjacent_coordinate(here, next);
    if (m < 0) throw CycleViolation(here, ViolationReason::NonAdjacentSuccessor, "successor " + next.key());

    const ISets sets = i_sets(here, net);
    const auto sw = sets.switching();
    auto names = [&] {
      std::string s;
      for (int k : sw) s += (s.empty() ? "" : ",") + net.name(k);
      return s;
    };
    if (sw.empty()) throw CycleViolation(here, ViolationReason::NoSwitchingCoordinate, "");
    if (sw.size() > 1)
      throw CycleViolation(here, ViolationReason::MultipleSwitchingCoordinates, "switching " + names());
    if (sw.front() != m)
      throw CycleViolation(here, ViolationReason::WrongCoordinate,
                           "switching " + names() + ", wall on " + net.name(m));

    const Wall w = net.wall_between(here, next);
    const bool up = std::find(sets.plus.begin(), sets.plus.end(), m) != sets.plus.end();
    if ((w.orientation == Orientation::Up) != up)
      throw CycleViolation(here, ViolationReason::WrongDirection, "");

    const double theta = net.threshold(m, w.threshold_index);
    const double fn = net.focal(next)[m];
    if (up ? !(fn > theta) : !(fn < theta))
      throw CycleViolation(next, ViolationReason::NonTransversalWall, "wall on " + net.name(m));

    cert.entries.push_back({here, sets, m, w.orientation});
  }
  return cert;
}

std::vector<int> switching_coordinates(const GlassNetwork& net, const CycleSpec& cycle) {
  std::set<int> s;
  for (const auto& w : cycle.walls(net)) s.insert(w.coordinate);
  return {s.begin(), s.end()};
}

std::vector<int> Spine::pinned() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < box.size(); ++i)
    if (box.intervals[i].degenerate()) out.push_back(static_cast<int>(i));
  return out;
}

Spine spine(const GlassNetwork& net, const CycleSpec& cycle) {
  Spine s;
  s.box.intervals.assign(static_cast<std::size_t>(net.dimension()), Interval{});
  for (const auto& w : cycle.walls(net)) {
    const Box closure = net.wall_closure(w);
    for (std::size_t i = 0; i < closure.size(); ++i)
      s.box.intervals[i] = intersect(s.box.intervals[i], closure.intervals[i]);
  }
  s.empty = s.box.empty();
  return s;
}

Vector spine_vertex(const GlassNetwork& net, const Spine& s) {
  if (s.empty) throw NotNonIdealError("cycle is ideal: its spine is empty");
  Vector a(net.dimension());
  for (int i = 0; i < net.dimension(); ++i) {
    const Interval& iv = s.box.intervals[static_cast<std::size_t>(i)];
    const auto& l = net.ladder(i).thresholds;
    const auto it = std::find_if(l.begin(), l.end(), [&](double t) { return iv.contains(t); });
    if (it == l.end())
      throw DomainError("spine contains no threshold of " + net.name(i));
    a[i] = *it;
  }
  return a;
}

}  // namespace glassnet
