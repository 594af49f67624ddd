#include "glassnet/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "glassnet/errors.hpp"

namespace glassnet {

Embedding::Embedding(std::vector<EmbeddingRow> rows, int source_dimension)
    : rows_(std::move(rows)), source_dimension_(source_dimension) {
  std::vector<bool> covered(static_cast<std::size_t>(source_dimension), false);
  for (const auto& r : rows_) {
    if (r.variable < 0 || r.variable >= source_dimension)
      throw DomainError("embedding row refers to variable " + std::to_string(r.variable + 1));
    covered[static_cast<std::size_t>(r.variable)] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw DomainError("embedding must keep at least one row per variable");
  if (!std::is_sorted(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.variable, a.threshold_index) < std::tie(b.variable, b.threshold_index);
      }))
    throw DomainError("embedding rows must be ordered variable-major, threshold-minor");
}

Matrix Embedding::B() const {
  Matrix b = Matrix::Zero(dimension(), source_dimension_);
  for (int r = 0; r < dimension(); ++r) b(r, rows_[static_cast<std::size_t>(r)].variable) = 1.0;
  return b;
}

Vector Embedding::offset() const {
  Vector v(dimension());
  for (int r = 0; r < dimension(); ++r) v[r] = rows_[static_cast<std::size_t>(r)].offset;
  return v;
}

Vector Embedding::apply(const Vector& x) const {
  if (x.size() != source_dimension_) throw DomainError("point dimension does not match embedding");
  Vector y(dimension());
  for (int r = 0; r < dimension(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    y[r] = x[row.variable] - row.offset;
  }
  return y;
}

Vector Embedding::unembed(const Vector& y, double tol) const {
  if (y.size() != dimension()) throw DomainError("point dimension does not match embedding");
  Vector x(source_dimension_);
  std::vector<bool> seen(static_cast<std::size_t>(source_dimension_), false);
  for (int r = 0; r < dimension(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    const double value = y[r] + row.offset;
    const auto v = static_cast<std::size_t>(row.variable);
    if (!seen[v]) {
      x[row.variable] = value;
      seen[v] = true;
    } else if (std::abs(x[row.variable] - value) > tol * std::max(1.0, std::abs(value))) {
      throw NotOnSubspaceError("embedded rows of x" + std::to_string(row.variable + 1) +
                               " disagree: " + std::to_string(x[row.variable]) + " vs " +
                               std::to_string(value));
    }
  }
  return x;
}

Vector Embedding::project(const Vector& y) const {
  Vector sum = Vector::Zero(source_dimension_);
  Vector count = Vector::Zero(source_dimension_);
  for (int r = 0; r < dimension(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    sum[row.variable] += y[r] + row.offset;
    count[row.variable] += 1.0;
  }
  return apply(sum.cwiseQuotient(count));
}

std::optional<int> Embedding::row_of(int variable, int threshold_index) const {
  for (int r = 0; r < dimension(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    if (row.variable == variable && row.threshold_index == threshold_index) return r;
  }
  return std::nullopt;
}

RegionIndex Embedding::orthant_of(const RegionIndex& region) const {
  std::vector<int> levels(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    levels[r] = region[static_cast<std::size_t>(rows_[r].variable)] > rows_[r].threshold_index ? 1 : 0;
  return RegionIndex(std::move(levels));
}

std::vector<std::string> Embedding::row_names(const GlassNetwork& net) const {
  std::vector<std::string> out;
  for (const auto& r : rows_) out.push_back(net.name(r.variable) + "^" + std::to_string(r.threshold_index + 1));
  return out;
}

Embedding build_embedding(const GlassNetwork& net) {
  std::vector<EmbeddingRow> rows;
  for (int i = 0; i < net.dimension(); ++i)
    for (int j = 0; j < net.ladder(i).size(); ++j) rows.push_back({i, j, net.threshold(i, j)});
  return Embedding(std::move(rows), net.dimension());
}

GlassNetwork embed_network(const GlassNetwork& net, const Embedding& emb,
                           std::span<const RegionIndex> regions) {
  std::map<RegionIndex, Vector> focal;
  for (const auto& region : regions) {
    const Vector f = emb.apply(net.focal(region));
    const RegionIndex orthant = emb.orthant_of(region);
    const auto [it, inserted] = focal.emplace(orthant, f);
    if (!inserted && it->second != f)
      throw DomainError("regions map to orthant " + orthant.key() + " with different focal points");
  }
  std::vector<ThresholdLadder> ladders(static_cast<std::size_t>(emb.dimension()), ThresholdLadder{{0.0}});
  return GlassNetwork(std::move(ladders), std::move(focal), emb.row_names(net));
}

GlassNetwork embed_network(const GlassNetwork& net, const Embedding& emb) {
  std::vector<RegionIndex> regions;
  for (const auto& [r, f] : net.focal_points()) regions.push_back(r);
  return embed_network(net, emb, regions);
}

Vector Compression::project(const Vector& x) const {
  Vector y(static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) y[static_cast<Eigen::Index>(k)] = x[kept[k]];
  return y;
}

RegionIndex Compression::project(const RegionIndex& r) const {
  std::vector<int> levels;
  for (int k : kept) levels.push_back(r[static_cast<std::size_t>(k)]);
  return RegionIndex(std::move(levels));
}

CompressedCycle compress(const GlassNetwork& net, const CycleSpec& cycle) {
  if (!net.binary()) throw DomainError("compression needs a binary network");
  Compression c{switching_coordinates(net, cycle), net.dimension()};

  std::vector<ThresholdLadder> ladders;
  std::vector<std::string> names;
  for (int k : c.kept) {
    ladders.push_back(net.ladder(k));
    names.push_back(net.name(k));
  }
  std::map<RegionIndex, Vector> focal;
  CycleSpec compressed;
  for (const auto& r : cycle.regions) {
    const RegionIndex pr = c.project(r);
    focal.emplace(pr, c.project(net.focal(r)));
    compressed.regions.push_back(pr);
  }
  GlassNetwork out(std::move(ladders), std::move(focal), std::move(names));
  return {std::move(c), std::move(out), std::move(compressed)};
}

RecenteredBinary recenter_at_vertex(const GlassNetwork& net, const CycleSpec& cycle) {
  const Spine s = spine(net, cycle);
  if (s.empty) throw NotNonIdealError("cycle " + cycle.to_string() + " is ideal: its spine is empty");
  const Vector a = spine_vertex(net, s);

  std::vector<EmbeddingRow> rows;
  for (int i = 0; i < net.dimension(); ++i) {
    const auto& l = net.ladder(i).thresholds;
    const int j = static_cast<int>(std::find(l.begin(), l.end(), a[i]) - l.begin());
    rows.push_back({i, j, a[i]});
  }
  Embedding emb(std::move(rows), net.dimension());
  GlassNetwork binary = embed_network(net, emb, cycle.regions);
  CycleSpec orthants;
  for (const auto& r : cycle.regions) orthants.regions.push_back(emb.orthant_of(r));
  return {a, std::move(emb), std::move(binary), std::move(orthants)};
}

Embedding minimal_embedding(const GlassNetwork& net, const CycleSpec& cycle) {
  std::set<std::pair<int, int>> crossed;
  for (const auto& w : cycle.walls(net)) crossed.emplace(w.coordinate, w.threshold_index);

  std::vector<EmbeddingRow> rows;
  for (int i = 0; i < net.dimension(); ++i) {
    bool any = false;
    for (int j = 0; j < net.ladder(i).size(); ++j) {
      if (!crossed.contains({i, j})) continue;
      rows.push_back({i, j, net.threshold(i, j)});
      any = true;
    }
    if (!any) {
      const int level = cycle.regions.front()[static_cast<std::size_t>(i)];
      const int j = level > 0 ? level - 1 : 0;
      rows.push_back({i, j, net.threshold(i, j)});
    }
  }
  return Embedding(std::move(rows), net.dimension());
}

std::vector<Rational> exact_embedded_focal(const GlassNetwork& net, const Embedding& emb,
                                           const RegionIndex& region) {
  const Vector& f = net.focal(region);
  std::vector<Rational> out;
  out.reserve(emb.rows().size());
  for (const auto& row : emb.rows()) out.push_back(Rational(f[row.variable]) - Rational(row.offset));
  return out;
}

}  // namespace glassnet
