#include <gtest/gtest.h>

#include <random>

#include "turan/blocks.hpp"
#include "turan/canon.hpp"
#include "turan/constructions.hpp"
#include "turan/error.hpp"
#include "turan/pattern.hpp"
#include "turan/wide_graph.hpp"

namespace turan {
namespace {

TEST(BipartiteTest, SmallMembers) {
  EXPECT_EQ(count_triangles(bipartite_matching(4)), 2u);
  EXPECT_EQ(count_triangles(bipartite_matching(6)), 4u);
  EXPECT_EQ(count_triangles(bipartite_matching(8)), 8u);
  EXPECT_EQ(count_triangles(bipartite_matching(10)), 12u);
  EXPECT_EQ(bipartite_matching(8).edge_count(), 16u + 2u);
  EXPECT_THROW(bipartite_matching(3), Error);
  EXPECT_THROW(bipartite_matching(65), Error);
  EXPECT_THROW(bipartite_matching_edges(3), Error);
}

TEST(BipartiteTest, EveryMemberUpToSixtyFour) {
  for (int n = 4; n <= 64; ++n) {
    const Graph g = bipartite_matching(n);
    ASSERT_EQ(count_triangles(g), static_cast<std::size_t>(n) * n / 8) << n;
    ASSERT_TRUE(is_p4hat_free(g)) << n;
    ASSERT_TRUE(WideGraph::from_edges(n, bipartite_matching_edges(n)).edge_count() == g.edge_count());
  }
}

TEST(BipartiteTest, EveryMemberUpToTwoHundredWide) {
  for (int n = 4; n <= 200; ++n) {
    const WideGraph g = WideGraph::from_edges(n, bipartite_matching_edges(n));
    ASSERT_EQ(count_triangles(g), static_cast<std::size_t>(n) * n / 8) << n;
    ASSERT_FALSE(contains_suspension_p4(g).has_value()) << n;
  }
}

TEST(WideGraphTest, AgreesWithGraph) {
  std::mt19937_64 rng(0x3d);
  std::bernoulli_distribution coin(0.4);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 40;
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) es.push_back(Edge{u, v});
    const Graph g = Graph::from_edges(n, es);
    const WideGraph w = WideGraph::from_graph(g);
    ASSERT_EQ(w.edge_count(), g.edge_count());
    ASSERT_EQ(count_triangles(w), count_triangles(g));
    ASSERT_EQ(contains_suspension_p4(w), contains_suspension_p4(g));
  }
}

TEST(WideGraphTest, Validation) {
  EXPECT_THROW(WideGraph::from_edges(5, {{0, 5}}), Error);
  EXPECT_THROW(WideGraph::from_edges(5, {{2, 2}}), Error);
  const WideGraph big = WideGraph::from_edges(130, {{0, 129}, {64, 129}, {0, 64}});
  EXPECT_EQ(big.words(), 3);
  EXPECT_EQ(count_triangles(big), 1u);
}

TEST(SmallExtremalTest, Members) {
  EXPECT_EQ(small_extremal(4), complete(4));
  for (int n = 4; n <= 7; ++n) {
    const Graph g = small_extremal(n);
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(count_triangles(g), expected_triangles(Family::kSmallExtremal, n));
    EXPECT_TRUE(is_p4hat_free(g));
  }
  EXPECT_EQ(small_extremal(7).edge_count(), 12u);
  EXPECT_THROW(small_extremal(8), Error);
}

TEST(SixteenVertexTest, Structure) {
  const Graph g = sixteen_vertex();
  EXPECT_EQ(g.order(), 16);
  EXPECT_EQ(g.edge_count(), 48u);
  EXPECT_EQ(count_triangles(g), 32u);
  EXPECT_TRUE(is_p4hat_free(g));
  const BlockDecomposition d = decompose(g);
  EXPECT_EQ(d.blocks.size(), 8u);
  EXPECT_TRUE(d.stray_edges.empty());
  for (const auto& b : d.blocks) EXPECT_EQ(b.classification.kind, BlockKind::kK4);
  for (int v = 0; v < 16; ++v) {
    EXPECT_EQ(g.degree(v), 6);
    EXPECT_EQ(neighborhood_subgraph(g, v).graph.edge_count(), 6u);
  }
}

TEST(FamilyTest, Registry) {
  for (const auto& f : construction_families()) EXPECT_EQ(&family_by_name(f.name), &f);
  EXPECT_THROW(family_by_name("petersen"), Error);
  EXPECT_FALSE(family_by_name("complete").p4hat_free);
  EXPECT_EQ(build(Family::kBook, 3), book(3));
  EXPECT_EQ(expected_triangles(Family::kComplete, 5), 10u);
  EXPECT_EQ(count_triangles(book(6)), expected_triangles(Family::kBook, 6));
  EXPECT_EQ(build(Family::kSixteenVertex, 0), sixteen_vertex());
}

}  // namespace
}  // namespace turan
