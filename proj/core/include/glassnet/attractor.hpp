#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "glassnet/cycle.hpp"
#include "glassnet/embedding.hpp"
#include "glassnet/fractional_map.hpp"
#include "glassnet/network.hpp"

namespace glassnet {

enum class FrameKind { MinimalEmbedding, Recentered };

const char* to_string(FrameKind k);

/// Coordinates in which a cycle's wall maps become linear-fractional: every crossed
/// threshold sits at 0.
struct AnalysisFrame {
  FrameKind kind = FrameKind::Recentered;
  Embedding embedding;
  GlassNetwork network;  // binary network on the frame coordinates
  CycleSpec cycle;       // the cycle's orthants in `network`
  std::size_t base_wall = 0;
  /// Frame coordinate that reaches 0 at the end of step s (step s runs through
  /// cycle region base_wall + s).
  std::vector<int> exit_rows;
  /// Frame coordinate pinned on the base wall.
  int base_row = 0;
  /// Base-wall cone in frame coordinates: 0 at base_row, orthant signs elsewhere.
  ConeSection base_cone;

  /// Frame point back to source coordinates (projecting onto the frame's image first).
  Vector to_source(const Vector& y) const;
  Vector from_source(const Vector& x) const { return embedding.apply(x); }
};

struct ReturnMap {
  LinearFractionalMap map;
  std::vector<LinearFractionalMap> steps;
  AnalysisFrame frame;
};

/// Poincare return map on wall `base_wall` (the wall entering cycle.regions[base_wall]).
/// Non-ideal cycles use the frame recentered at the spine vertex, ideal cycles the
/// minimal embedding. Coefficients are composed exactly and rounded once.
ReturnMap return_map(const GlassNetwork& net, const CycleSpec& cycle, std::size_t base_wall = 0);

/// Compact box in source coordinates inside the closure of the base wall. Unbounded
/// ends are cut one unit beyond the outermost threshold and every cycle focal
/// coordinate. For non-ideal cycles, coordinates that never switch are restricted to
/// a_i + s [v/2, u + 1], with u, v the extreme distances of the cycle's focal
/// coordinates from the spine vertex a and s their side.
Box trapping_box(const GlassNetwork& net, const CycleSpec& cycle, std::size_t base_wall = 0);

struct InvarianceCertificate {
  bool holds = false;
  /// Smallest distance from a vertex image to the box boundary over the free
  /// coordinates; negative when an image leaves the box.
  double margin = 0.0;
};

/// Maps every vertex of `box` (given in map coordinates) and checks that the images
/// lie strictly inside it. Degenerate coordinates must be reproduced within pinned_tol.
/// Throws OutOfDomainError when a vertex has a nonpositive transit factor.
InvarianceCertificate check_invariance(const LinearFractionalMap& map, const Box& box,
                                       double pinned_tol = 1e-9);
/// Same check for a box given in source coordinates of `frame`.
InvarianceCertificate check_invariance(const LinearFractionalMap& map, const Box& box,
                                       const AnalysisFrame& frame, double pinned_tol = 1e-9);

struct ClassifyOptions {
  /// Band around lambda = 1 treated as degenerate.
  double degeneracy_tol = 1e-9;
  double eigen_tol = 1e-12;
  /// Max-norm step size at which fixed-point iteration stops.
  double fixed_point_tol = 1e-13;
  int max_iterations = 10000;
  std::size_t base_wall = 0;
};

enum class Verdict { IdealUniqueOrbit, UniqueOrbit, Degenerate };

const char* to_string(Verdict v);

struct Waypoint {
  Wall wall;
  Vector point;
  double time = 0.0;
};

struct ClassificationCertificates {
  CycleCertificate cycle;
  double eigen_residual = 0.0;
  std::optional<double> projective_diameter;
  std::optional<double> contraction_rate;
  std::optional<int> birkhoff_bound;
  int iterations = 0;
  std::optional<Box> trapping_box;
  std::optional<InvarianceCertificate> invariance;
};

struct CycleClassification {
  CycleSpec cycle;
  Verdict verdict = Verdict::Degenerate;
  bool marginal = false;
  double lambda = 0.0;
  std::optional<Vector> fixed_point;
  std::optional<double> period;
  /// Crossings after leaving the base wall; the last one is the return to it.
  std::vector<Waypoint> waypoints;
  ClassificationCertificates certificates;
  Spine spine;
  std::size_t base_wall = 0;
  FrameKind frame = FrameKind::Recentered;
  /// Frame coordinates kept by compression (all of them for full-rank cycles).
  std::vector<int> kept;
  bool compressed = false;
};

/// Throws CycleViolation for cycles that are not cyclic attractors, ContainmentFailure
/// when the eigen-ray fixed point misses the base wall.
CycleClassification classify(const GlassNetwork& net, const CycleSpec& cycle,
                             const ClassifyOptions& options = {});

/// Cycles of the state transition graph made of regions with a single successor, each
/// rotated to start at its smallest region, sorted. Requires a total focal map.
std::vector<CycleSpec> find_cyclic_attractors(const GlassNetwork& net);

}  // namespace glassnet
