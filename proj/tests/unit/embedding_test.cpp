#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "glassnet/cycle.hpp"
#include "glassnet/dynamics.hpp"
#include "glassnet/embedding.hpp"
#include "glassnet/errors.hpp"
#include "oracles.hpp"

using namespace glassnet;
using glassnet::testing::fixture;
using glassnet::testing::max_abs;
using glassnet::testing::vec;

namespace {

const CycleSpec kSquare = CycleSpec::parse("00>10>11>01");
const CycleSpec kNetC = CycleSpec::parse("00>10>20>21>11>01");
const CycleSpec kNetD = CycleSpec::parse("000>100>110>010");
const CycleSpec kNetF = CycleSpec::parse("10>20>21>11");

// Simulates x0 in `source` and emb(x0) in `target`, comparing every event through emb.
double commutation_error(const GlassNetwork& source, const GlassNetwork& target,
                         const std::function<Vector(const Vector&)>& emb, const Vector& x0,
                         std::size_t events) {
  SimulationLimits limits;
  limits.max_events = events;
  const auto a = simulate(source, x0, limits);
  const auto b = simulate(target, emb(x0), limits);
  EXPECT_EQ(a.events.size(), b.events.size());
  double err = 0.0;
  for (std::size_t k = 0; k < std::min(a.events.size(), b.events.size()); ++k) {
    err = std::max(err, max_abs(emb(a.events[k].exit.point) - b.events[k].exit.point));
    err = std::max(err, std::abs(a.events[k].cumulative_time - b.events[k].cumulative_time));
  }
  return err;
}

}  // namespace

TEST(BuildEmbedding, NetC) {
  const auto c = fixture("net_c");
  const Embedding emb = build_embedding(c);
  EXPECT_EQ(emb.dimension(), 3);
  EXPECT_EQ(emb.source_dimension(), 2);
  EXPECT_EQ(emb.apply(vec({0.5, -3})), vec({0.5, -0.5, -3}));
  Matrix B(3, 2);
  B << 1, 0, 1, 0, 0, 1;
  EXPECT_EQ(emb.B(), B);
  EXPECT_EQ(emb.offset(), vec({0, 1, 0}));
  EXPECT_EQ(emb.row_names(c), (std::vector<std::string>{"x1^1", "x1^2", "x2^1"}));
}

TEST(BuildEmbedding, BinaryIsIdentity) {
  const auto a = fixture("net_a");
  const Embedding emb = build_embedding(a);
  EXPECT_EQ(emb.B(), Matrix::Identity(2, 2));
  EXPECT_EQ(emb.offset(), Vector::Zero(2));
}

TEST(EmbedNetwork, NetCOrthants) {
  const auto c = fixture("net_c");
  const Embedding emb = build_embedding(c);
  const GlassNetwork e = embed_network(c, emb);
  EXPECT_EQ(emb.orthant_of({1, 0}), (RegionIndex{1, 0, 0}));
  EXPECT_EQ(e.focal({1, 0, 0}), vec({2, 1, -1}));
  EXPECT_EQ(e.focal({1, 1, 0}), vec({2, 1, 1}));
  EXPECT_EQ(e.focal_points().size(), 6u);
  EXPECT_FALSE(e.has_focal({0, 1, 0}));
  EXPECT_TRUE(validate(e, FocalCoverage::Sparse).ok());
}

TEST(EmbedNetwork, NetAUnchanged) {
  const auto a = fixture("net_a");
  const GlassNetwork e = embed_network(a, build_embedding(a));
  EXPECT_EQ(e.focal_points(), a.focal_points());
  EXPECT_TRUE(std::equal(e.ladders().begin(), e.ladders().end(), a.ladders().begin()));
}

TEST(EmbedNetwork, MissingSourceFocal) {
  const GlassNetwork sparse({ThresholdLadder{{0, 1}}}, {{RegionIndex{0}, vec({2})}});
  const std::vector<RegionIndex> regions{RegionIndex{1}};
  EXPECT_THROW(embed_network(sparse, build_embedding(sparse), regions), MissingFocalError);
}

TEST(Unembed, Examples) {
  const auto c = fixture("net_c");
  const Embedding emb = build_embedding(c);
  EXPECT_EQ(emb.unembed(vec({0.5, -0.5, -3})), vec({0.5, -3}));
  EXPECT_THROW(emb.unembed(vec({0.5, 0.4, -3})), NotOnSubspaceError);
  const Embedding id = build_embedding(fixture("net_a"));
  EXPECT_EQ(unembed(vec({0.25, -7}), id), vec({0.25, -7}));
}

TEST(Unembed, RoundTripIsIdentity) {
  const auto f = fixture("net_f");
  const Embedding emb = build_embedding(f);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-4, 4);
  for (int k = 0; k < 200; ++k) {
    const Vector x = vec({d(rng), d(rng)});
    EXPECT_EQ(emb.unembed(emb.apply(x)), x);
  }
}

TEST(Embedding, ImageExcludesOrigin) {
  for (const char* name : {"net_c", "net_f"}) {
    const Embedding emb = build_embedding(fixture(name));
    const Matrix B = emb.B();
    const Vector v = emb.offset();
    const Vector x = B.colPivHouseholderQr().solve(v);
    EXPECT_GT((B * x - v).norm(), 0.1) << name;
  }
}

TEST(Compress, NetDIsNetB) {
  const auto d = fixture("net_d");
  const auto b = fixture("net_b");
  const CompressedCycle cc = compress(d, kNetD);
  EXPECT_EQ(cc.compression.kept, (std::vector<int>{0, 1}));
  EXPECT_FALSE(cc.compression.identity());
  EXPECT_EQ(cc.network, b);
  EXPECT_EQ(cc.cycle, kSquare);
  EXPECT_EQ(cc.compression.project(vec({-1, -2, -1})), vec({-1, -2}));
}

TEST(Compress, FullRankIsIdentity) {
  const CompressedCycle cc = compress(fixture("net_b"), kSquare);
  EXPECT_TRUE(cc.compression.identity());
  EXPECT_EQ(cc.network, fixture("net_b"));
}

TEST(Compress, NeedsBinaryNetwork) {
  EXPECT_THROW(compress(fixture("net_c"), kNetC), DomainError);
}

TEST(Compress, CommutesWithSimulation) {
  const auto d = fixture("net_d");
  const CompressedCycle cc = compress(d, kNetD);
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    const RegionIndex r = kNetD.region(static_cast<std::size_t>(k));
    const Vector x0 = glassnet::testing::random_point(d, r, rng);
    const auto proj = [&](const Vector& x) { return cc.compression.project(x); };
    EXPECT_LE(commutation_error(d, cc.network, proj, x0, 12), 1e-10);
  }
}

TEST(Recenter, NetF) {
  const auto f = fixture("net_f");
  const RecenteredBinary rb = recenter_at_vertex(f, kNetF);
  EXPECT_EQ(rb.vertex, vec({0, 0}));
  EXPECT_EQ(rb.cycle, kSquare);
  EXPECT_EQ(rb.network.focal_points().size(), 4u);
  EXPECT_EQ(rb.network.focal({0, 0}), vec({0.5, -0.5}));
  EXPECT_EQ(rb.network.focal({1, 0}), vec({0.5, 0.25}));
  EXPECT_EQ(rb.network.focal({1, 1}), vec({-0.25, 0.5}));
  EXPECT_EQ(rb.network.focal({0, 1}), vec({-0.5, -0.25}));
  EXPECT_NO_THROW(verify_cyclic_attractor(rb.network, rb.cycle));
}

TEST(Recenter, NetAIsItself) {
  const auto a = fixture("net_a");
  const RecenteredBinary rb = recenter_at_vertex(a, kSquare);
  EXPECT_EQ(rb.vertex, vec({0, 0}));
  EXPECT_EQ(rb.network.focal_points(), a.focal_points());
}

TEST(Recenter, IdealCycleRejected) {
  EXPECT_THROW(recenter_at_vertex(fixture("net_c"), kNetC), NotNonIdealError);
}

TEST(Recenter, CommutesWithSimulation) {
  const auto f = fixture("net_f");
  const RecenteredBinary rb = recenter_at_vertex(f, kNetF);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const RegionIndex r = kNetF.region(static_cast<std::size_t>(k));
    const Vector x0 = glassnet::testing::random_point(f, r, rng, 1.0);
    const auto id = [&](const Vector& x) { return rb.embedding.apply(x); };
    EXPECT_LE(commutation_error(f, rb.network, id, x0, 12), 1e-10);
  }
}

TEST(MinimalEmbedding, Examples) {
  const auto c = fixture("net_c");
  EXPECT_EQ(minimal_embedding(c, kNetC), build_embedding(c));

  const auto f = fixture("net_f");
  const Embedding m = minimal_embedding(f, kNetF);
  ASSERT_EQ(m.dimension(), 2);
  EXPECT_EQ(m, recenter_at_vertex(f, kNetF).embedding);

  const auto b = fixture("net_b");
  EXPECT_EQ(minimal_embedding(b, kSquare), build_embedding(b));
}

TEST(MinimalEmbedding, KeepsNonSwitchingVariable) {
  const Embedding m = minimal_embedding(fixture("net_d"), kNetD);
  EXPECT_EQ(m.dimension(), 3);
}

TEST(EmbedNetwork, CommutesWithSimulation) {
  for (const char* name : {"net_c", "net_f"}) {
    const auto net = fixture(name);
    const Embedding emb = build_embedding(net);
    const GlassNetwork target = embed_network(net, emb);
    std::mt19937_64 rng(99);
    for (int k = 0; k < 100; ++k) {
      const RegionIndex r = net.regions()[static_cast<std::size_t>(k) % net.region_count()];
      const Vector x0 = glassnet::testing::random_point(net, r, rng);
      const auto phi = [&](const Vector& x) { return emb.apply(x); };
      EXPECT_LE(commutation_error(net, target, phi, x0, 20), 1e-10) << name;
    }
  }
}

TEST(ExactEmbeddedFocal, MatchesDoublePath) {
  const auto c = fixture("net_c");
  const Embedding emb = build_embedding(c);
  for (const auto& [r, f] : c.focal_points()) {
    const auto exact = exact_embedded_focal(c, emb, r);
    const Vector approx = emb.apply(f);
    for (int i = 0; i < emb.dimension(); ++i)
      EXPECT_EQ(exact[static_cast<std::size_t>(i)].convert_to<double>(), approx[i]);
  }
}
