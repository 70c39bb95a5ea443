#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "turan/canon.hpp"
#include "turan/constructions.hpp"
#include "turan/error.hpp"
#include "turan/graph6.hpp"

namespace turan {
namespace {

std::vector<Graph> all_labeled(int n) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back(Edge{u, v});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((mask >> i) & 1U) es.push_back(all[i]);
    out.push_back(Graph::from_edges(n, es));
  }
  return out;
}

TEST(CanonTest, Examples) {
  const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const std::vector<int> perm{3, 0, 4, 1, 2};
  EXPECT_EQ(canonical_form(c5), canonical_form(c5.relabeled(perm)));

  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph claw = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_NE(canonical_form(p4), canonical_form(claw));
  EXPECT_FALSE(are_isomorphic(p4, claw));

  const std::vector<int> k4perm{2, 3, 1, 0};
  EXPECT_TRUE(are_isomorphic(complete(4), complete(4).relabeled(k4perm)));
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_FALSE(are_isomorphic(book(2), c4));

  // Two K4s glued at a vertex, labeled differently from small_extremal(7).
  const Graph glued = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 6}, {1, 2}, {1, 6}, {2, 6},
                                            {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
  EXPECT_TRUE(are_isomorphic(small_extremal(7), glued));
}

TEST(CanonTest, FormIsAnEncodingOfTheGraph) {
  std::mt19937_64 rng(0xc0);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(1 + i % 12, 0.5, rng);
    const CanonicalForm f = canonical_form(g);
    EXPECT_TRUE(are_isomorphic(decode_graph6(f.graph6), g));
    EXPECT_EQ(decode_graph6(f.graph6).edge_count(), g.edge_count());
  }
}

TEST(CanonTest, ElevenGraphsOnFourVertices) {
  std::set<CanonicalForm> forms;
  for (const Graph& g : all_labeled(4)) forms.insert(canonical_form(g));
  EXPECT_EQ(forms.size(), 11u);
}

TEST(CanonTest, Guards) {
  try {
    canonical_form(Graph::empty(13));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeGuard);
  }
  try {
    canonical_form(Graph::empty(12), CanonOptions{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceGuard);
  }
}

TEST(CanonTest, RegularGraphsStayWithinBudget) {
  // Vertex-transitive inputs defeat colour refinement entirely.
  const Graph k66 = Graph::from_edges(12, [] {
    std::vector<Edge> es;
    for (int u = 0; u < 6; ++u)
      for (int v = 6; v < 12; ++v) es.push_back(Edge{u, v});
    return es;
  }());
  EXPECT_NO_THROW(canonical_form(k66));
  EXPECT_NO_THROW(canonical_form(Graph::empty(12)));
  EXPECT_NO_THROW(canonical_form(complete(12)));
  std::vector<Edge> cycle;
  for (int i = 0; i < 12; ++i) cycle.push_back(Edge::of(i, (i + 1) % 12));
  const Graph c12 = Graph::from_edges(12, cycle);
  std::vector<Edge> two_c6;
  for (int i = 0; i < 6; ++i) {
    two_c6.push_back(Edge::of(i, (i + 1) % 6));
    two_c6.push_back(Edge::of(6 + i, 6 + (i + 1) % 6));
  }
  EXPECT_FALSE(are_isomorphic(c12, Graph::from_edges(12, two_c6)));
}

TEST(CanonPropertyTest, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(0xc1);
  std::uniform_int_distribution<int> order(1, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const int n = order(rng);
    const Graph g = testing::random_graph(n, density(rng), rng);
    const CanonicalForm f = canonical_form(g);
    for (int j = 0; j < 100; ++j) {
      ASSERT_EQ(canonical_form(g.relabeled(testing::random_permutation(n, rng))), f);
    }
  }
}

TEST(CanonPropertyTest, AgreesWithBruteForceOnAllPairsUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Graph> graphs = all_labeled(n);
    std::vector<CanonicalForm> fast;
    std::vector<std::string> slow;
    for (const Graph& g : graphs) {
      fast.push_back(canonical_form(g));
      slow.push_back(testing::brute_canonical(g));
    }
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i; j < graphs.size(); ++j)
        ASSERT_EQ(fast[i] == fast[j], slow[i] == slow[j]) << "n=" << n << " i=" << i << " j=" << j;
  }
}

TEST(CanonPropertyTest, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(0xc2);
  for (int i = 0; i < 3'000; ++i) {
    const int n = 6 + i % 2;
    // Same degree sequence often enough to make the comparison interesting.
    const Graph g = testing::random_graph(n, 0.5, rng);
    const Graph h = i % 3 == 0 ? g.relabeled(testing::random_permutation(n, rng)) : testing::random_graph(n, 0.5, rng);
    ASSERT_EQ(are_isomorphic(g, h), testing::brute_isomorphic(g, h));
  }
}

}  // namespace
}  // namespace turan
