#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "pvclab/graph_core.hpp"
#include "pvclab/oracle.hpp"

using namespace pvclab;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST(Distance, InfinityOrdersLast) {
  EXPECT_LT(Distance{3}, Distance::infinity());
  EXPECT_EQ(Distance{2} + Distance{3}, Distance{5});
  EXPECT_TRUE((Distance{2} + Distance::infinity()).is_infinite());
  EXPECT_EQ(Distance::infinity().to_string(), "inf");
  EXPECT_THROW((void)Distance::infinity().value(), std::exception);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(0), precondition_error);
  EXPECT_THROW(Graph(3, {{0, 0}}), precondition_error);
  EXPECT_THROW(Graph(3, {{0, 3}}), precondition_error);
}

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2U);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(GraphCore, DistancesOnPath) {
  const Graph p = path_graph(5);
  auto d = bfs_distances(p, 0);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(d[i], Distance(static_cast<std::uint32_t>(i)));
  EXPECT_EQ(diameter(p), Distance{4});
  EXPECT_TRUE(diameter(Graph(3, {{0, 1}})).is_infinite());
}

TEST(GraphCore, ParityDistances) {
  const Graph c5 = cycle_graph(5);
  auto pd = parity_distances(c5, 0, 0);
  EXPECT_EQ(pd.even, Distance{0});
  EXPECT_EQ(pd.odd, Distance{5});
  pd = parity_distances(c5, 0, 1);
  EXPECT_EQ(pd.odd, Distance{1});
  EXPECT_EQ(pd.even, Distance{4});
  const Graph p3 = path_graph(3);
  EXPECT_TRUE(parity_distances(p3, 0, 1).even.is_infinite());
}

TEST(GraphCore, ShortestParityWalkIsAWalkOfThatLength) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(7, 0.4, rng);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        const auto pd = parity_distances(g, u, v);
        for (int parity : {0, 1}) {
          auto walk = shortest_parity_walk(g, u, v, parity);
          ASSERT_EQ(walk.has_value(), pd.of_parity(parity).is_finite());
          if (!walk) continue;
          EXPECT_EQ(walk->front(), u);
          EXPECT_EQ(walk->back(), v);
          EXPECT_EQ(walk->size() - 1, pd.of_parity(parity).value());
          for (std::size_t i = 0; i + 1 < walk->size(); ++i) EXPECT_TRUE(g.adjacent((*walk)[i], (*walk)[i + 1]));
        }
      }
    }
  }
}

TEST(GraphCore, ConnectivityMatchesSubsetRemoval) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = random_graph(n, 0.55, rng);
    const int expected = brute::connectivity(g);
    EXPECT_EQ(vertex_connectivity(g), expected);
    EXPECT_EQ(detail::connectivity_by_flow(g), expected);
  }
  EXPECT_EQ(vertex_connectivity(petersen_graph()), 3);
  EXPECT_EQ(vertex_connectivity(complete_graph(5)), 4);
  EXPECT_EQ(vertex_connectivity(path_graph(4)), 1);
}

TEST(GraphCore, ChromaticNumberMatchesExhaustive) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(1 + trial % 8, 0.5, rng);
    auto r = chromatic_number(g);
    EXPECT_EQ(r.chromatic_number, brute::chromatic(g));
    for (auto [u, v] : g.edges()) EXPECT_NE(r.coloring[u], r.coloring[v]);
  }
  EXPECT_EQ(chromatic_number(petersen_graph()).chromatic_number, 3);
  EXPECT_EQ(chromatic_number(cycle_graph(7)).chromatic_number, 3);
}

TEST(GraphCore, StructuralPredicates) {
  auto c4 = structural_predicates(cycle_graph(4));
  EXPECT_TRUE(c4.is_bipartite);
  EXPECT_FALSE(c4.has_dist2_pair_with_unique_common_neighbor);
  auto c5 = structural_predicates(cycle_graph(5));
  EXPECT_FALSE(c5.is_bipartite);
  EXPECT_TRUE(c5.has_dist2_pair_with_unique_common_neighbor);
  EXPECT_FALSE(c5.every_edge_in_triangle);
  EXPECT_TRUE(structural_predicates(complete_graph(4)).every_edge_in_triangle);
  EXPECT_TRUE(structural_predicates(path_graph(5)).is_tree);
  EXPECT_EQ(structural_predicates(star_graph(3)).min_degree, 1);
}

TEST(GraphCore, SpanningTreePaths) {
  const Graph g = petersen_graph();
  auto st = spanning_tree(g, 0);
  EXPECT_EQ(st.tree.size(), 9U);
  for (Vertex a = 0; a < 10; ++a) {
    for (Vertex b = 0; b < 10; ++b) {
      const Path p = tree_path(st, a, b);
      EXPECT_EQ(p.front(), a);
      EXPECT_EQ(p.back(), b);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(st.tree.adjacent(p[i], p[i + 1]));
    }
  }
  EXPECT_THROW(spanning_tree(Graph(3, {{0, 1}}), 0), precondition_error);
}
