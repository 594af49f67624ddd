#include "glassnet/fractional_map.hpp"

#include <algorithm>
#include <cmath>

#include "glassnet/errors.hpp"

namespace glassnet {

LinearFractionalMap LinearFractionalMap::identity(int dimension) {
  return {Matrix::Identity(dimension, dimension), Vector::Zero(dimension)};
}

double MapImage::transit_time() const { return std::log(factor); }

LinearFractionalMap wall_map(const Vector& focal, int exit_coordinate) {
  const double fm = focal[exit_coordinate];
  if (fm == 0.0)
    throw FocalOnWallError("focal coordinate " + std::to_string(exit_coordinate + 1) +
                           " lies on the exit wall");
  const auto n = focal.size();
  LinearFractionalMap map = LinearFractionalMap::identity(static_cast<int>(n));
  map.A.col(exit_coordinate) -= focal / fm;
  map.psi[exit_coordinate] = -1.0 / fm;
  return map;
}

LinearFractionalMap compose(const LinearFractionalMap& outer, const LinearFractionalMap& inner) {
  return {outer.A * inner.A, inner.psi + inner.A.transpose() * outer.psi};
}

MapImage apply(const LinearFractionalMap& map, const Vector& x) {
  const double factor = 1.0 + map.psi.dot(x);
  if (!(factor > 0.0))
    throw OutOfDomainError("transit factor 1 + <psi, x> = " + std::to_string(factor) +
                           " is not positive");
  return {map.A * x / factor, factor};
}

ExactFractionalMap::ExactFractionalMap(int dimension)
    : dimension_(dimension),
      a_(static_cast<std::size_t>(dimension * dimension)),
      psi_(static_cast<std::size_t>(dimension)) {
  for (int i = 0; i < dimension; ++i) at(i, i) = 1;
}

ExactFractionalMap ExactFractionalMap::wall_map(const std::vector<Rational>& focal,
                                                int exit_coordinate) {
  const int n = static_cast<int>(focal.size());
  const Rational& fm = focal[static_cast<std::size_t>(exit_coordinate)];
  if (fm == 0)
    throw FocalOnWallError("focal coordinate " + std::to_string(exit_coordinate + 1) +
                           " lies on the exit wall");
  ExactFractionalMap map(n);
  for (int i = 0; i < n; ++i) map.at(i, exit_coordinate) -= focal[static_cast<std::size_t>(i)] / fm;
  map.psi_[static_cast<std::size_t>(exit_coordinate)] = Rational(-1) / fm;
  return map;
}

ExactFractionalMap compose(const ExactFractionalMap& outer, const ExactFractionalMap& inner) {
  const int n = outer.dimension_;
  ExactFractionalMap out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational sum = 0;
      for (int k = 0; k < n; ++k) {
        const Rational& l = outer.a(i, k);
        if (l == 0) continue;
        sum += l * inner.a(k, j);
      }
      out.at(i, j) = sum;
    }
  }
  for (int j = 0; j < n; ++j) {
    Rational sum = inner.psi(j);
    for (int k = 0; k < n; ++k) {
      const Rational& p = outer.psi(k);
      if (p == 0) continue;
      sum += inner.a(k, j) * p;
    }
    out.psi_[static_cast<std::size_t>(j)] = sum;
  }
  return out;
}

LinearFractionalMap ExactFractionalMap::to_double() const {
  LinearFractionalMap map{Matrix(dimension_, dimension_), Vector(dimension_)};
  for (int i = 0; i < dimension_; ++i) {
    for (int j = 0; j < dimension_; ++j) map.A(i, j) = a(i, j).convert_to<double>();
    map.psi[i] = psi(i).convert_to<double>();
  }
  return map;
}

ConeSection ConeSection::positive_orthant(int dimension) {
  return {std::vector<int>(static_cast<std::size_t>(dimension), 1)};
}

std::vector<int> ConeSection::free_coordinates() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] != 0) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

void check_in_cone(const Vector& x, const ConeSection& cone) {
  if (x.size() != cone.dimension()) throw NotInConeError("dimension mismatch with cone");
  bool nonzero = false;
  for (int i = 0; i < cone.dimension(); ++i) {
    const int s = cone.signs[static_cast<std::size_t>(i)];
    if (s == 0) {
      if (x[i] != 0.0) throw NotInConeError("pinned coordinate is nonzero");
      continue;
    }
    if (s * x[i] < 0.0) throw NotInConeError("coordinate has the wrong sign");
    if (x[i] != 0.0) nonzero = true;
  }
  if (!nonzero) throw NotInConeError("zero vector");
}

// Sign-normalized restriction of A to the free coordinates of the cone.
Matrix restrict(const Matrix& A, const ConeSection& cone) {
  const auto free = cone.free_coordinates();
  const auto d = static_cast<Eigen::Index>(free.size());
  Matrix R(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      const int i = free[static_cast<std::size_t>(r)];
      const int j = free[static_cast<std::size_t>(c)];
      R(r, c) = cone.signs[static_cast<std::size_t>(i)] * cone.signs[static_cast<std::size_t>(j)] *
                A(i, j);
    }
  return R;
}

}  // namespace

double hilbert_distance(const Vector& x, const Vector& y, const ConeSection& cone) {
  check_in_cone(x, cone);
  check_in_cone(y, cone);
  double max_ratio = 0.0;
  double min_ratio = kInfinity;
  for (int i : cone.free_coordinates()) {
    if (x[i] == 0.0 && y[i] == 0.0) continue;
    if (x[i] == 0.0 || y[i] == 0.0) return kInfinity;
    const double r = x[i] / y[i];
    max_ratio = std::max(max_ratio, r);
    min_ratio = std::min(min_ratio, r);
  }
  return std::log(max_ratio / min_ratio);
}

double projective_diameter(const Matrix& A, const ConeSection& cone) {
  const Matrix R = restrict(A, cone);
  const auto d = R.rows();
  if ((R.array() <= 0.0).any()) return kInfinity;
  const ConeSection positive = ConeSection::positive_orthant(static_cast<int>(d));
  double delta = 0.0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j)
      delta = std::max(delta, hilbert_distance(R.col(i), R.col(j), positive));
  return delta;
}

double contraction_rate(double delta) {
  const double s = std::exp(0.5 * delta);
  return (s - 1.0) / (s + 1.0);
}

int birkhoff_iteration_bound(double delta, double tol) {
  if (!std::isfinite(delta)) return std::numeric_limits<int>::max();
  const double k = contraction_rate(delta);
  if (delta == 0.0 || k == 0.0) return 2;
  const double steps = std::ceil(std::log(delta / tol) / std::log(1.0 / k));
  return static_cast<int>(std::max(0.0, steps)) + 2;
}

EigenPair dominant_eigenpair(const Matrix& A, const ConeSection& cone, double tol,
                             int max_iterations) {
  const Matrix R = restrict(A, cone);
  const auto d = R.rows();
  const auto free = cone.free_coordinates();
  if (d == 0) throw NotInConeError("cone has no free coordinates");

  Vector x = Vector::Ones(d);
  EigenPair out;
  bool converged = false;
  for (int it = 1; it <= max_iterations; ++it) {
    Vector y = R * x;
    out.iterations = it;
    const double scale = y.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
      converged = true;  // nilpotent on the cone: lambda = 0
      break;
    }
    y /= scale;
    const double diff = (y - x).cwiseAbs().maxCoeff();
    x = std::move(y);
    if (diff < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NoConvergenceError("power iteration", max_iterations);

  x /= x.norm();
  const Vector rx = R * x;
  out.lambda = rx.norm();
  if (rx.dot(x) < 0.0) out.lambda = -out.lambda;

  out.vector = Vector::Zero(A.cols());
  for (std::size_t r = 0; r < free.size(); ++r)
    out.vector[free[r]] = cone.signs[static_cast<std::size_t>(free[r])] * x[static_cast<Eigen::Index>(r)];
  out.residual = (A * out.vector - out.lambda * out.vector).norm();
  return out;
}

}  // namespace glassnet
