#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "pvclab/oracle.hpp"
#include "pvclab/products.hpp"

using namespace pvclab;

TEST(Products, EdgeCounts) {
  const Graph a = path_graph(3);   // 3 vertices, 2 edges
  const Graph b = cycle_graph(4);  // 4 vertices, 4 edges
  const std::size_t na = 3, nb = 4, ma = 2, mb = 4;
  EXPECT_EQ(join(a, b).graph.size(), ma + mb + na * nb);
  EXPECT_EQ(cartesian(a, b).graph.size(), na * mb + nb * ma);
  EXPECT_EQ(lexicographic(a, b).graph.size(), na * mb + ma * nb * nb);
  EXPECT_EQ(direct(a, b).graph.size(), 2 * ma * mb);
  EXPECT_EQ(strong(a, b).graph.size(), na * mb + nb * ma + 2 * ma * mb);
}

TEST(Products, LexicographicIsNotCommutative) {
  const Graph a = path_graph(3);
  const Graph b = complete_graph(2);
  EXPECT_NE(lexicographic(a, b).graph.size(), lexicographic(b, a).graph.size());
}

TEST(Products, IndexingAndLabels) {
  auto p = strong(path_graph(2), path_graph(3));
  EXPECT_EQ(p.vertex_of(1, 2), 5);
  EXPECT_EQ(p.coordinates(4), (std::pair<Vertex, Vertex>{1, 1}));
  EXPECT_EQ(p.graph.label(5), "(1,2)");
  EXPECT_TRUE(p.is_cartesian_edge(0, 1));
  EXPECT_FALSE(p.is_cartesian_edge(0, 4));
  auto j = join(path_graph(2), path_graph(3));
  EXPECT_EQ(j.graph.label(0), "L:0");
  EXPECT_EQ(j.graph.label(4), "R:2");
  EXPECT_EQ(j.join_side(3), (std::pair<int, Vertex>{1, 1}));
  EXPECT_THROW(j.coordinates(0), precondition_error);
}

TEST(Products, DirectOfBipartiteFactorsIsDisconnected) {
  EXPECT_FALSE(is_connected(direct(path_graph(3), cycle_graph(4)).graph));
  EXPECT_TRUE(is_connected(direct(path_graph(3), cycle_graph(5)).graph));
}

TEST(Products, DistanceFormulasOnRandomFactors) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto make = [&](int n) {
      std::bernoulli_distribution coin(0.45);
      std::vector<Edge> e;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (coin(rng)) e.emplace_back(u, v);
      return Graph(n, e);
    };
    const Graph a = make(1 + trial % 5);
    const Graph b = make(1 + (trial / 5) % 5);
    for (auto kind : {ProductKind::cartesian, ProductKind::lexicographic, ProductKind::strong, ProductKind::direct}) {
      auto r = verify_distance_formula(kind, a, b);
      EXPECT_TRUE(r.pass) << to_string(kind) << " trial " << trial;
      EXPECT_TRUE(r.exhaustive);
    }
  }
}

TEST(Products, LexicographicIsolatedVertexBranch) {
  // g isolated in G: (g,h) and (g,h') only meet inside the H-copy.
  const Graph a(2);
  const Graph b = path_graph(4);
  const DistanceFormula f(ProductKind::lexicographic, a, b);
  EXPECT_EQ(f(0, 0, 0, 3), Distance{3});
  const DistanceFormula f2(ProductKind::lexicographic, path_graph(2), b);
  EXPECT_EQ(f2(0, 0, 0, 3), Distance{2});
}

TEST(Products, SampledVerificationForLargeProducts) {
  auto r = verify_distance_formula(ProductKind::strong, cycle_graph(17), path_graph(17), 5);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.pairs_checked, 10000U);
}

TEST(Products, JoinHasNoFormula) {
  EXPECT_THROW(DistanceFormula(ProductKind::join, path_graph(2), path_graph(2)), precondition_error);
}

TEST(Products, ParseKind) {
  EXPECT_EQ(parse_product_kind("strong"), ProductKind::strong);
  EXPECT_FALSE(parse_product_kind("tensor").has_value());
}
