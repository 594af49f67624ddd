#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "glassnet/network.hpp"

namespace glassnet {

/// Closed sequence of regions; the successor of the last region is the first.
///
/// Wall i is the wall *entering* regions[i] (from regions[i-1]), so wall 0 is the default
/// Poincare section and step i of a return map runs from wall i to wall i+1 through
/// regions[i].
struct CycleSpec {
  std::vector<RegionIndex> regions;

  std::size_t size() const { return regions.size(); }
  const RegionIndex& region(std::size_t i) const { return regions[i % regions.size()]; }
  const RegionIndex& predecessor(std::size_t i) const {
    return regions[(i + regions.size() - 1) % regions.size()];
  }
  /// Wall entering regions[i]. Throws DomainError for non-adjacent regions.
  Wall wall(const GlassNetwork& net, std::size_t i) const;
  std::vector<Wall> walls(const GlassNetwork& net) const;

  /// "00>10>11>01" (compact region keys) or "0,0>1,0>..." when levels exceed 9.
  std::string to_string() const;
  static CycleSpec parse(std::string_view text);

  bool operator==(const CycleSpec&) const = default;
};

/// Per-region record proving the cyclic-attractor property.
struct CycleCertificate {
  struct Entry {
    RegionIndex region;
    ISets sets;
    int coordinate = 0;
    Orientation direction = Orientation::Up;
  };
  std::vector<Entry> entries;
};

/// Checks that every region has exactly one switching coordinate, that it is the
/// coordinate of the wall to the successor and points the right way, and that the
/// successor's focal point lies on the far side of that wall. Throws CycleViolation.
CycleCertificate verify_cyclic_attractor(const GlassNetwork& net, const CycleSpec& cycle);

/// Coordinates that switch at least once along the cycle, ascending.
std::vector<int> switching_coordinates(const GlassNetwork& net, const CycleSpec& cycle);

/// Points common to the closures of all walls of the cycle.
struct Spine {
  bool empty = true;
  Box box;

  /// Coordinates fixed to a single value.
  std::vector<int> pinned() const;
};

Spine spine(const GlassNetwork& net, const CycleSpec& cycle);

inline bool is_ideal(const GlassNetwork& net, const CycleSpec& cycle) {
  return spine(net, cycle).empty;
}

/// Lexicographically smallest vertex (by variable, then threshold level) in the closure
/// of a nonempty spine. Throws NotNonIdealError for an empty spine.
Vector spine_vertex(const GlassNetwork& net, const Spine& s);

}  // namespace glassnet
