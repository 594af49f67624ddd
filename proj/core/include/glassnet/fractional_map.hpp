#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glassnet/types.hpp"

namespace glassnet {

using Rational = boost::multiprecision::cpp_rational;

/// x -> A x / (1 + <psi, x>) on the half-space where the denominator is positive.
///
/// Wall-to-wall maps of a network whose switching thresholds sit at 0 have this form,
/// and the denominator is the transit factor: the time spent is ln(1 + <psi, x>).
struct LinearFractionalMap {
  Matrix A;
  Vector psi;

  static LinearFractionalMap identity(int dimension);
  int dimension() const { return static_cast<int>(psi.size()); }
};

struct MapImage {
  Vector point;
  double factor = 1.0;

  double transit_time() const;
};

/// Map from the entry wall of an orthant to the wall where `exit_coordinate` reaches 0,
/// for an orthant whose focal point is `focal`. Throws FocalOnWallError if
/// focal[exit_coordinate] == 0.
LinearFractionalMap wall_map(const Vector& focal, int exit_coordinate);

/// outer after inner.
LinearFractionalMap compose(const LinearFractionalMap& outer, const LinearFractionalMap& inner);

/// Throws OutOfDomainError when 1 + <psi, x> <= 0.
MapImage apply(const LinearFractionalMap& map, const Vector& x);

/// Same maps with exact rational coefficients. Composition around long cycles stays exact,
/// so borderline multipliers such as 1 are not perturbed by construction noise.
class ExactFractionalMap {
 public:
  explicit ExactFractionalMap(int dimension);  // identity

  static ExactFractionalMap wall_map(const std::vector<Rational>& focal, int exit_coordinate);

  int dimension() const { return dimension_; }
  const Rational& a(int row, int col) const {
    return a_[static_cast<std::size_t>(row * dimension_ + col)];
  }
  const Rational& psi(int i) const { return psi_[static_cast<std::size_t>(i)]; }

  /// outer after inner.
  friend ExactFractionalMap compose(const ExactFractionalMap& outer, const ExactFractionalMap& inner);

  LinearFractionalMap to_double() const;

 private:
  Rational& at(int row, int col) { return a_[static_cast<std::size_t>(row * dimension_ + col)]; }

  int dimension_;
  std::vector<Rational> a_;
  std::vector<Rational> psi_;
};

/// Orthant cone inside a wall section: coordinates with sign 0 are pinned to 0, the others
/// must carry the given sign (+1 or -1).
struct ConeSection {
  std::vector<int> signs;

  static ConeSection positive_orthant(int dimension);
  int dimension() const { return static_cast<int>(signs.size()); }
  std::vector<int> free_coordinates() const;
};

/// Hilbert projective distance ln(max_i r_i / min_i r_i), r_i = x_i / y_i over the free
/// coordinates. Boundary points give +infinity. Throws NotInConeError for points outside
/// the closed cone (wrong sign, nonzero pinned coordinate, or zero vector).
double hilbert_distance(const Vector& x, const Vector& y, const ConeSection& cone);

/// Largest Hilbert distance between images of the cone's extreme rays, +infinity unless
/// A maps every extreme ray into the open cone.
double projective_diameter(const Matrix& A, const ConeSection& cone);

/// Birkhoff contraction ratio (sqrt(e^delta) - 1) / (sqrt(e^delta) + 1).
double contraction_rate(double delta);

/// A priori iteration count for power iteration to reach `tol` from the cone's central
/// ray, given the projective diameter of A.
int birkhoff_iteration_bound(double delta, double tol);

struct EigenPair {
  double lambda = 0.0;
  Vector vector;  // unit 2-norm, inside the cone
  int iterations = 0;
  double residual = 0.0;  // ||A v - lambda v||
};

/// Dominant cone eigenpair by power iteration from the central ray of the cone.
/// Pinned coordinates are dropped before iterating and are 0 in the returned vector.
/// Throws NoConvergenceError after max_iterations.
EigenPair dominant_eigenpair(const Matrix& A, const ConeSection& cone, double tol = 1e-12,
                             int max_iterations = 10000);

}  // namespace glassnet
