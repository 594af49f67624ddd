#include "glassnet/region.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "glassnet/errors.hpp"
#include "glassnet/types.hpp"

namespace glassnet {

RegionIndex RegionIndex::stepped(std::size_t coordinate, int delta) const {
  RegionIndex out = *this;
  out.levels[coordinate] += delta;
  return out;
}

std::string RegionIndex::key() const {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(levels[i]);
  }
  return out;
}

std::string RegionIndex::compact() const {
  const bool single_digits =
      std::all_of(levels.begin(), levels.end(), [](int l) { return l >= 0 && l <= 9; });
  if (!single_digits) return key();
  std::string out;
  for (int l : levels) out += static_cast<char>('0' + l);
  return out;
}

RegionIndex RegionIndex::parse_key(std::string_view text) {
  std::vector<int> levels;
  if (text.find(',') == std::string_view::npos) {
    if (text.empty()) throw ParseError("empty region key");
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("bad region key '" + std::string(text) + "'");
      levels.push_back(c - '0');
    }
    return RegionIndex(std::move(levels));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view part = text.substr(pos, end - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || value < 0)
      throw ParseError("bad region key '" + std::string(text) + "'");
    levels.push_back(value);
    pos = end + 1;
  }
  return RegionIndex(std::move(levels));
}

int adjacent_coordinate(const RegionIndex& a, const RegionIndex& b) {
  if (a.size() != b.size()) return -1;
  int found = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = a[i] - b[i];
    if (d == 0) continue;
    if (std::abs(d) != 1 || found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

double Interval::distance(double x) const {
  if (x < lo) return lo - x;
  if (x > hi) return x - hi;
  return 0.0;
}

Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

bool Box::empty() const {
  return std::any_of(intervals.begin(), intervals.end(), [](const Interval& i) { return i.empty(); });
}

bool Box::bounded() const {
  return std::all_of(intervals.begin(), intervals.end(), [](const Interval& i) { return i.bounded(); });
}

double Box::distance(const Vector& x) const {
  double d = 0.0;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    d = std::max(d, intervals[i].distance(x[static_cast<Eigen::Index>(i)]));
  return d;
}

Vector Box::barycenter() const {
  if (!bounded()) throw DomainError("barycenter of an unbounded box");
  Vector c(static_cast<Eigen::Index>(intervals.size()));
  for (std::size_t i = 0; i < intervals.size(); ++i)
    c[static_cast<Eigen::Index>(i)] = intervals[i].midpoint();
  return c;
}

std::vector<Vector> Box::vertices() const {
  if (!bounded()) throw DomainError("vertices of an unbounded box");
  std::vector<Vector> out{barycenter()};
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    if (intervals[i].degenerate()) {
      for (auto& v : out) v[k] = intervals[i].lo;
      continue;
    }
    std::vector<Vector> next;
    next.reserve(out.size() * 2);
    for (const auto& v : out) {
      Vector lo = v, hi = v;
      lo[k] = intervals[i].lo;
      hi[k] = intervals[i].hi;
      next.push_back(std::move(lo));
      next.push_back(std::move(hi));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace glassnet
