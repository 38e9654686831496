#include "pegasus_topo/analysis.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "pegasus_topo/chimera.hpp"
#include "pegasus_topo/pegasus.hpp"

namespace pegasus_topo {
namespace {

TEST(Degrees, LoneCell) {
  EXPECT_EQ(degree_histogram(chimera_graph({1, 1, 1})), (DegreeHistogram{{4, 8}}));
}

TEST(Degrees, PegasusTwoByTwoMatchesOracle) {
  const auto h = degree_histogram(pegasus_graph({2, 2, 3}));
  const auto expected = oracle::degree_histogram({2, 2, 3, true});
  EXPECT_EQ(h, (DegreeHistogram(expected.begin(), expected.end())));
  std::size_t total = 0;
  for (const auto& [deg, n] : h) total += n;
  EXPECT_EQ(total, 96u);
}

TEST(Degrees, InteriorFifteenEveryLayer) {
  const Dims d{5, 5, 3};
  const auto g = pegasus_graph(d);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto q = g.coord(v);
    if (!is_interior(q.cell(), d)) continue;
    EXPECT_EQ(g.degree(v), 15u) << q;
  }
}

TEST(Compress, SingleCellPerLayer) {
  const auto cg = compress(pegasus_graph({1, 1, 3}));
  EXPECT_EQ(cg.vertex_count(), 3u);
  // layer 0 -> 1 and 1 -> 2 carry the two same-(x,y) bundles; 2 -> 0 falls off the patch
  ASSERT_EQ(cg.edges.size(), 2u);
  for (const auto& e : cg.edges) {
    EXPECT_EQ(e.kind, CompressedEdgeKind::InterLayerBundle);
    EXPECT_EQ(e.multiplicity, 2u);
    EXPECT_EQ(e.edge_count, 16u);
  }
}

TEST(Compress, InteriorCellDegreeTen) {
  const Dims d{5, 5, 3};
  const auto cg = compress(pegasus_graph(d));
  const auto oracle_pairs = oracle::cell_pairs({5, 5, 3, true});
  ASSERT_EQ(cg.edges.size(), oracle_pairs.size());
  for (int z = 0; z < 3; ++z)
    for (int y = 1; y < 4; ++y)
      for (int x = 1; x < 4; ++x) {
        const std::size_t v = cell_index({x, y, z}, d);
        std::size_t grid = 0, bundle = 0, oracle_deg = 0;
        for (const auto& e : cg.edges) {
          if (e.a != v && e.b != v) continue;
          (e.kind == CompressedEdgeKind::GridSameLayer ? grid : bundle) += 1;
        }
        for (const auto& [a, b] : oracle_pairs) oracle_deg += (a == v || b == v);
        EXPECT_EQ(grid, 4u);
        EXPECT_EQ(bundle, 6u);
        EXPECT_EQ(oracle_deg, 10u);
        EXPECT_EQ(cg.degree(v), 10u);
      }
}

TEST(Compress, BundleEdgesAccountForAllInterLayerCouplers) {
  for (int n : {1, 2, 4, 5}) {
    const auto g = pegasus_graph({n, n + 1, 3});
    const auto cg = compress(g);
    std::size_t inter = 0;
    for (const Edge& e : g.edges()) inter += e.cls.kind == EdgeKind::PegasusInterLayer;
    std::size_t represented = 0;
    for (const auto& e : cg.edges)
      if (e.kind == CompressedEdgeKind::InterLayerBundle) {
        represented += 8 * e.multiplicity;
        EXPECT_EQ(e.edge_count, 8 * e.multiplicity);
      } else {
        EXPECT_EQ(e.edge_count, 4u);
      }
    EXPECT_EQ(represented, inter);
  }
}

TEST(Compress, ChimeraIsAGrid) {
  const auto cg = compress(chimera_graph({4, 3, 1}));
  EXPECT_EQ(cg.vertex_count(), 12u);
  EXPECT_EQ(cg.edges.size(), 3u * 3 + 4u * 2);
  for (const auto& e : cg.edges) EXPECT_EQ(e.kind, CompressedEdgeKind::GridSameLayer);
}

TEST(Planarity, CompressedPegasusExceedsEdgeBound) {
  const auto c = nonplanarity_certificate(compress(pegasus_graph({5, 5, 3})));
  const auto oracle_pairs = oracle::cell_pairs({5, 5, 3, true});
  EXPECT_EQ(c.verdict, PlanarityVerdict::NonPlanar);
  EXPECT_EQ(c.kind, CertificateKind::EdgeBound);
  EXPECT_EQ(c.vertices, 75u);
  EXPECT_EQ(c.edges, oracle_pairs.size());
  // 3 layers * 40 grid pairs + (65 + 65 + 56) inter-layer pairs
  EXPECT_EQ(c.edges, 306u);
  EXPECT_EQ(c.edge_bound, 219u);
}

TEST(Planarity, SingleCellHasK33) {
  const auto g = chimera_graph({1, 1, 1});
  const auto c = nonplanarity_certificate(g);
  EXPECT_EQ(c.verdict, PlanarityVerdict::NonPlanar);
  ASSERT_EQ(c.kind, CertificateKind::KuratowskiSubdivision);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->type, KuratowskiGraph::K33);
  EXPECT_TRUE(verify_witness(SimpleGraph::from(g), *c.witness));
}

TEST(Planarity, CompressedChimeraStaysUnknown) {
  const auto c = nonplanarity_certificate(compress(chimera_graph({5, 5, 1})));
  EXPECT_EQ(c.verdict, PlanarityVerdict::Unknown);
  EXPECT_EQ(c.kind, CertificateKind::None);
  EXPECT_FALSE(c.witness.has_value());
}

TEST(Planarity, FindsK5) {
  SimpleGraph k5(5);
  for (VertexId a = 0; a < 5; ++a)
    for (VertexId b = a + 1; b < 5; ++b) k5.add_edge(a, b);
  k5.finish();
  // 10 edges > 9 = 3n - 6
  EXPECT_EQ(nonplanarity_certificate(k5).kind, CertificateKind::EdgeBound);

  // subdivide every edge once: the bound no longer applies
  SimpleGraph sub(15);
  VertexId mid = 5;
  for (VertexId a = 0; a < 5; ++a)
    for (VertexId b = a + 1; b < 5; ++b, ++mid) {
      sub.add_edge(a, mid);
      sub.add_edge(mid, b);
    }
  sub.finish();
  const auto c = nonplanarity_certificate(sub);
  ASSERT_EQ(c.kind, CertificateKind::KuratowskiSubdivision);
  EXPECT_EQ(c.witness->type, KuratowskiGraph::K5);
  EXPECT_TRUE(verify_witness(sub, *c.witness));
}

TEST(Planarity, TamperedWitnessRejected) {
  const auto g = SimpleGraph::from(chimera_graph({1, 1, 1}));
  auto w = nonplanarity_certificate(g).witness.value();
  ASSERT_TRUE(verify_witness(g, w));
  auto bad = w;
  bad.paths[0] = {bad.branch[0], bad.branch[1]};  // same-side pair: not an edge
  EXPECT_FALSE(verify_witness(g, bad));
  bad = w;
  bad.branch[1] = bad.branch[0];
  EXPECT_FALSE(verify_witness(g, bad));
  bad = w;
  bad.paths.pop_back();
  EXPECT_FALSE(verify_witness(g, bad));
}

TEST(Planarity, ZeroBudgetGivesUnknown) {
  const auto c = nonplanarity_certificate(chimera_graph({1, 1, 1}), {0, 10});
  EXPECT_EQ(c.verdict, PlanarityVerdict::Unknown);
}

TEST(FindK4, PegasusCellContainsK4) {
  const Dims d{1, 1, 3};
  const auto g = pegasus_graph(d);
  const auto cliques = find_k4(g, 1000);
  ASSERT_FALSE(cliques.empty());
  Clique4 expected{linear_index({0, 0, 0, 0, 0, 0}, d), linear_index({0, 0, 0, 0, 0, 1}, d),
                   linear_index({0, 0, 0, 1, 0, 0}, d), linear_index({0, 0, 0, 1, 0, 1}, d)};
  EXPECT_NE(std::find(cliques.begin(), cliques.end(), expected), cliques.end());
  for (const auto& c : cliques)
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) EXPECT_TRUE(has_edge(g.coord(c[p]), g.coord(c[q]), d));
}

TEST(FindK4, AgreesWithFourSubsetScan) {
  const oracle::Lattice L{1, 1, 3, true};
  const auto adj = oracle::adjacency(L);
  std::vector<Clique4> brute;
  const auto n = static_cast<VertexId>(L.size());
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        for (VertexId e = c + 1; e < n; ++e)
          if (adj[a].count(b) && adj[a].count(c) && adj[a].count(e) && adj[b].count(c) &&
              adj[b].count(e) && adj[c].count(e))
            brute.push_back({a, b, c, e});
  EXPECT_EQ(find_k4(pegasus_graph({1, 1, 3}), 1u << 20), brute);
}

TEST(FindK4, ChimeraHasNone) {
  EXPECT_TRUE(find_k4(chimera_graph({4, 4, 1}), 100).empty());
  EXPECT_TRUE(find_k4(chimera_graph({2, 3, 3}), 100).empty());
}

TEST(FindK4, LimitRespected) {
  const auto g = pegasus_graph({2, 2, 3});
  EXPECT_TRUE(find_k4(g, 0).empty());
  EXPECT_EQ(find_k4(g, 3).size(), 3u);
  const auto all = find_k4(g, 1u << 20);
  const auto some = find_k4(g, 5);
  EXPECT_TRUE(std::equal(some.begin(), some.end(), all.begin()));
}

}  // namespace
}  // namespace pegasus_topo
