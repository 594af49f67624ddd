#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace glassnet {

/// Region label: levels[i] is the number of thresholds of variable i below the region.
struct RegionIndex {
  std::vector<int> levels;

  RegionIndex() = default;
  explicit RegionIndex(std::vector<int> l) : levels(std::move(l)) {}
  RegionIndex(std::initializer_list<int> l) : levels(l) {}

  std::size_t size() const { return levels.size(); }
  int operator[](std::size_t i) const { return levels[i]; }

  /// Copy with one coordinate moved by delta levels.
  RegionIndex stepped(std::size_t coordinate, int delta) const;

  /// Comma-separated levels, e.g. "2,1". This is the key format of network files.
  std::string key() const;
  /// Compact form used by cycle strings: "21" when every level is a single digit,
  /// otherwise the comma form.
  std::string compact() const;
  static RegionIndex parse_key(std::string_view text);

  auto operator<=>(const RegionIndex&) const = default;
  bool operator==(const RegionIndex&) const = default;
};

/// Index of the single coordinate in which a and b differ by exactly one level,
/// or -1 when the regions are not adjacent.
int adjacent_coordinate(const RegionIndex& a, const RegionIndex& b);

}  // namespace glassnet
