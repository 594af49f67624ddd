#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace glassnet {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Closed interval [lo, hi]; either end may be infinite. lo == hi pins the coordinate.
struct Interval {
  double lo = -kInfinity;
  double hi = kInfinity;

  bool degenerate() const { return lo == hi; }
  bool bounded() const { return lo > -kInfinity && hi < kInfinity; }
  bool empty() const { return lo > hi; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  double distance(double x) const;
  double midpoint() const { return 0.5 * (lo + hi); }

  bool operator==(const Interval&) const = default;
};

Interval intersect(const Interval& a, const Interval& b);

/// Axis-aligned box, one closed interval per coordinate.
struct Box {
  std::vector<Interval> intervals;

  std::size_t size() const { return intervals.size(); }
  bool empty() const;
  bool bounded() const;
  /// Max-norm distance from x to the box.
  double distance(const Vector& x) const;
  bool contains(const Vector& x) const { return distance(x) == 0.0; }
  Vector barycenter() const;
  /// Corners of the box; degenerate coordinates contribute a single value.
  /// Requires a bounded box.
  std::vector<Vector> vertices() const;

  bool operator==(const Box&) const = default;
};

}  // namespace glassnet
