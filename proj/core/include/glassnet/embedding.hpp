#pragma once

#include <optional>
#include <span>
#include <vector>

#include "glassnet/cycle.hpp"
#include "glassnet/fractional_map.hpp"
#include "glassnet/network.hpp"

namespace glassnet {

/// One embedded coordinate: x[variable] - offset, where offset is the threshold
/// theta[variable][threshold_index].
struct EmbeddingRow {
  int variable = 0;
  int threshold_index = 0;
  double offset = 0.0;

  bool operator==(const EmbeddingRow&) const = default;
};

/// Affine map x -> B x - offset into a space where every kept threshold sits at 0.
/// Rows are ordered variable-major, threshold-minor. Every source variable has at least
/// one row, so the map is injective and unembed() recovers x.
class Embedding {
 public:
  Embedding(std::vector<EmbeddingRow> rows, int source_dimension);

  int dimension() const { return static_cast<int>(rows_.size()); }
  int source_dimension() const { return source_dimension_; }
  const std::vector<EmbeddingRow>& rows() const { return rows_; }

  Matrix B() const;
  Vector offset() const;

  Vector apply(const Vector& x) const;
  /// Inverse on the image subspace. Throws NotOnSubspaceError when the rows of one
  /// variable disagree by more than tol.
  Vector unembed(const Vector& y, double tol = 1e-12) const;
  /// Nearest point of the image subspace (per-variable mean of the rows).
  Vector project(const Vector& y) const;

  std::optional<int> row_of(int variable, int threshold_index) const;
  /// Orthant (0/1 levels per row) containing the image of a source region.
  RegionIndex orthant_of(const RegionIndex& region) const;

  /// Embedded threshold names such as "x1^2".
  std::vector<std::string> row_names(const GlassNetwork& net) const;

  bool operator==(const Embedding&) const = default;

 private:
  std::vector<EmbeddingRow> rows_;
  int source_dimension_;
};

/// One row per (variable, threshold).
Embedding build_embedding(const GlassNetwork& net);

/// Binary network on the embedded coordinates. Orthants that contain the image of a
/// listed source region get the embedded focal point of that region; all others stay
/// without a focal point. Throws DomainError if two regions land in the same orthant
/// with different focal points, MissingFocalError for listed regions without one.
GlassNetwork embed_network(const GlassNetwork& net, const Embedding& emb,
                           std::span<const RegionIndex> regions);
/// Every region that has a focal point.
GlassNetwork embed_network(const GlassNetwork& net, const Embedding& emb);

inline Vector unembed(const Vector& y, const Embedding& emb) { return emb.unembed(y); }

/// Projection onto the coordinates that switch along a cycle.
struct Compression {
  std::vector<int> kept;
  int source_dimension = 0;

  bool identity() const { return static_cast<int>(kept.size()) == source_dimension; }
  Vector project(const Vector& x) const;
  RegionIndex project(const RegionIndex& r) const;
};

struct CompressedCycle {
  Compression compression;
  GlassNetwork network;
  CycleSpec cycle;
};

/// Drops the coordinates that never switch along a cycle of a binary network. The
/// compressed network carries focal points for the cycle's orthants only. A full-rank
/// cycle yields the identity compression.
CompressedCycle compress(const GlassNetwork& net, const CycleSpec& cycle);

/// A non-ideal cycle re-read as a binary network centred at a vertex shared by every
/// region closure of the cycle.
struct RecenteredBinary {
  Vector vertex;
  Embedding embedding;  // one row per variable, offset = vertex
  GlassNetwork network;
  CycleSpec cycle;      // the cycle's orthants in the recentered network
};

/// Throws NotNonIdealError when the cycle's spine is empty.
RecenteredBinary recenter_at_vertex(const GlassNetwork& net, const CycleSpec& cycle);

/// Rows only for thresholds crossed by the cycle; a variable that never switches keeps
/// one row at a threshold bounding the cycle's interval in that variable.
Embedding minimal_embedding(const GlassNetwork& net, const CycleSpec& cycle);

/// Focal point of a source region in embedded coordinates, computed exactly.
std::vector<Rational> exact_embedded_focal(const GlassNetwork& net, const Embedding& emb,
                                           const RegionIndex& region);

}  // namespace glassnet
