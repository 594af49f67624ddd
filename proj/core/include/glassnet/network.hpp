#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "glassnet/region.hpp"
#include "glassnet/types.hpp"

namespace glassnet {

/// Switching points of one variable, expected strictly increasing.
struct ThresholdLadder {
  std::vector<double> thresholds;

  int size() const { return static_cast<int>(thresholds.size()); }
  double operator[](std::size_t j) const { return thresholds[j]; }
  bool strictly_increasing() const;

  bool operator==(const ThresholdLadder&) const = default;
};

enum class Orientation { Up, Down };

const char* to_string(Orientation o);

/// Boundary between two regions that differ by one level in one coordinate.
/// threshold_index is 0-based into the ladder of `coordinate`.
struct Wall {
  RegionIndex from;
  RegionIndex to;
  int coordinate = 0;
  int threshold_index = 0;
  Orientation orientation = Orientation::Up;

  /// "x1@1:up" style label (1-based variable and threshold numbers).
  std::string descriptor() const;

  bool operator==(const Wall&) const = default;
};

/// Partition of the coordinates by where the focal point sits relative to a region.
struct ISets {
  std::vector<int> zero;
  std::vector<int> plus;
  std::vector<int> minus;

  /// plus and minus merged, ascending.
  std::vector<int> switching() const;

  bool operator==(const ISets&) const = default;
};

/// Immutable Glass network: threshold ladders plus a (possibly sparse) focal map.
///
/// Construction only checks shape (matching dimensions, levels in range). Semantic
/// conditions such as strictly increasing ladders or focal points off the thresholds
/// are reported by validate().
class GlassNetwork {
 public:
  GlassNetwork(std::vector<ThresholdLadder> ladders, std::map<RegionIndex, Vector> focal,
               std::vector<std::string> names = {});

  int dimension() const { return static_cast<int>(ladders_.size()); }
  std::span<const ThresholdLadder> ladders() const { return ladders_; }
  const ThresholdLadder& ladder(int i) const { return ladders_[static_cast<std::size_t>(i)]; }
  double threshold(int i, int j) const { return ladder(i)[static_cast<std::size_t>(j)]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }

  bool binary() const;

  bool has_focal(const RegionIndex& region) const { return focal_.contains(region); }
  /// Throws MissingFocalError.
  const Vector& focal(const RegionIndex& region) const;
  const std::map<RegionIndex, Vector>& focal_points() const { return focal_; }

  bool valid_region(const RegionIndex& region) const;
  std::size_t region_count() const;
  /// All regions in lexicographic order of their levels.
  std::vector<RegionIndex> regions() const;
  /// Open interval of coordinate i inside the region (infinite ends for outer levels).
  Interval region_interval(const RegionIndex& region, int i) const;
  /// Throws DomainError when the regions are not adjacent.
  Wall wall_between(const RegionIndex& from, const RegionIndex& to) const;
  /// Closure of the wall: the threshold pinned in the switching coordinate and the
  /// closed region intervals elsewhere.
  Box wall_closure(const Wall& wall) const;

  bool operator==(const GlassNetwork&) const = default;

 private:
  std::vector<ThresholdLadder> ladders_;
  std::map<RegionIndex, Vector> focal_;
  std::vector<std::string> names_;
};

/// Step function: number of thresholds strictly below each coordinate.
/// Throws OnWallError if a coordinate equals one of its thresholds.
RegionIndex tilde(const Vector& x, const GlassNetwork& net);

/// Level of a single value against a ladder, or -1 when it sits on a threshold.
int level_of(double x, const ThresholdLadder& ladder);

enum class FocalCoverage { Total, Sparse };

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const GlassNetwork& net, FocalCoverage coverage = FocalCoverage::Total);

ISets i_sets(const RegionIndex& region, const GlassNetwork& net);

/// State transition graph over every region of the network.
struct TransitionGraph {
  std::vector<RegionIndex> nodes;
  std::vector<std::vector<std::size_t>> successors;

  std::size_t index_of(const RegionIndex& region) const;
  std::size_t edge_count() const;
};

/// Requires a total focal map (MissingFocalError otherwise).
TransitionGraph state_transition_graph(const GlassNetwork& net);

}  // namespace glassnet
