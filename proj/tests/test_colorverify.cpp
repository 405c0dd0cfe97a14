#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "brute_force.hpp"
#include "pvclab/colorverify.hpp"
#include "pvclab/oracle.hpp"

using namespace pvclab;

namespace {

VertexColoring colors(std::vector<int> c) { return VertexColoring(std::move(c)); }

std::vector<int> random_colors(int n, int palette, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, palette);
  std::vector<int> c(n);
  for (auto& x : c) x = pick(rng);
  return c;
}

}  // namespace

TEST(Coloring, RejectsNonPositiveColors) {
  EXPECT_THROW(colors({1, 0}), precondition_error);
  EXPECT_THROW(VertexColoring(std::vector<int>{}), precondition_error);
  EXPECT_EQ(colors({1, 3, 3}).palette_size(), 3);
  EXPECT_EQ(colors({1, 3, 3}).distinct_colors(), 2);
}

TEST(ProperPath, EndpointsAreUnconstrained) {
  const Graph p = path_graph(4);
  EXPECT_TRUE(is_vertex_proper_path(p, colors({1, 1, 2, 2}), Path{0, 1, 2, 3}));
  EXPECT_FALSE(is_vertex_proper_path(p, colors({1, 2, 2, 1}), Path{0, 1, 2, 3}));
  EXPECT_THROW(is_vertex_proper_path(p, colors({1, 1, 1, 1}), Path{0, 2}), precondition_error);
}

TEST(ProperPath, SpecExamples) {
  const Graph c6 = cycle_graph(6);
  EXPECT_TRUE(is_proper_vertex_k_connected(c6, colors({1, 2, 1, 2, 1, 2}), 2));
  auto bad = first_failing_pair(c6, VertexColoring::monochromatic(6), Parameter::pvc(2));
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(distance(c6, bad->first, bad->second), Distance{3});
  EXPECT_TRUE(is_strong_proper_vertex_connected(path_graph(4), colors({1, 1, 2, 1})));
  EXPECT_FALSE(is_strong_proper_vertex_connected(path_graph(4), colors({1, 1, 1, 1})));
}

TEST(ProperPath, DistinctEndpointsRequired) {
  const Graph g = path_graph(3);
  const auto c = VertexColoring::monochromatic(3);
  EXPECT_THROW(find_proper_geodesic(g, c, 1, 1), precondition_error);
  EXPECT_THROW(find_k_disjoint_proper_paths(g, c, 1, 1, 1), precondition_error);
}

TEST(ProperPath, KOutOfRangeRejected) {
  EXPECT_THROW(is_proper_vertex_k_connected(path_graph(4), VertexColoring::monochromatic(4), 2), precondition_error);
}

TEST(DisjointSearch, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(21);
  int positives = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 3 + trial % 5;
    std::bernoulli_distribution coin(0.6);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    const Graph g(n, e);
    const auto c = random_colors(n, 1 + trial % 3, rng);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        for (int k = 1; k <= 3; ++k) {
          const bool expected = brute::has_k_disjoint_proper(g, c, u, v, k);
          auto w = find_k_disjoint_proper_paths(g, VertexColoring(c), u, v, k);
          ASSERT_EQ(w.has_value(), expected) << "trial " << trial << " pair " << u << "," << v << " k=" << k;
          if (w) {
            ++positives;
            EXPECT_TRUE(check_witness(g, VertexColoring(c), *w));
            EXPECT_EQ(static_cast<int>(w->paths.size()), k);
          }
        }
      }
    }
  }
  EXPECT_GT(positives, 100);
}

TEST(DisjointSearch, DirectEdgeCountsOnce) {
  const Graph k2 = complete_graph(2);
  EXPECT_TRUE(find_k_disjoint_proper_paths(k2, VertexColoring::monochromatic(2), 0, 1, 1));
  EXPECT_FALSE(find_k_disjoint_proper_paths(k2, VertexColoring::monochromatic(2), 0, 1, 2));
}

TEST(DisjointSearch, BudgetExhaustionIsAnError) {
  const Graph g = complete_graph(9);
  EXPECT_THROW(find_k_disjoint_proper_paths(g, VertexColoring::monochromatic(9), 0, 1, 8, 3), budget_exceeded);
}

TEST(DisjointSearch, BudgetFromEnvironment) {
  ::setenv("PVCLAB_BUDGET", "1234", 1);
  EXPECT_EQ(default_search_budget(), 1234U);
  ::unsetenv("PVCLAB_BUDGET");
  EXPECT_EQ(default_search_budget(), 20'000'000U);
}

TEST(Geodesic, AgreesWithEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = random_tree(n, trial);
    std::vector<Edge> e = g.edges();
    std::bernoulli_distribution coin(0.3);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    const Graph h(n, e);
    const auto c = random_colors(n, 2, rng);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const bool expected = brute::has_proper_geodesic(h, c, u, v);
        EXPECT_EQ(exists_proper_geodesic(h, VertexColoring(c), u, v), expected);
        auto p = find_proper_geodesic(h, VertexColoring(c), u, v);
        ASSERT_EQ(p.has_value(), expected);
        if (p) {
          EXPECT_TRUE(check_witness(h, VertexColoring(c), Witness{{u, v}, WitnessMode::geodesic, {*p}}));
        }
      }
    }
  }
}

TEST(Witness, DefectsAreReported) {
  const Graph c6 = cycle_graph(6);
  const auto c = colors({1, 2, 1, 2, 1, 2});
  auto defect = [&](Witness w) { return check_witness(c6, c, w).reason; };
  EXPECT_EQ(defect({{0, 3}, WitnessMode::k_disjoint, {{0, 1, 2, 3}, {0, 5, 4, 3}}}), WitnessDefect::none);
  EXPECT_EQ(defect({{0, 3}, WitnessMode::k_disjoint, {}}), WitnessDefect::no_paths);
  EXPECT_EQ(defect({{0, 3}, WitnessMode::k_disjoint, {{0, 2, 3}}}), WitnessDefect::not_a_path);
  EXPECT_EQ(defect({{0, 3}, WitnessMode::k_disjoint, {{0, 1, 2, 3}, {0, 1, 2, 3}}}), WitnessDefect::not_disjoint);
  EXPECT_EQ(defect({{0, 3}, WitnessMode::k_disjoint, {{0, 1, 2}}}), WitnessDefect::bad_endpoints);
  EXPECT_EQ(defect({{0, 0}, WitnessMode::k_disjoint, {{0, 1, 0}}}), WitnessDefect::bad_endpoints);
  const auto mono = VertexColoring::monochromatic(6);
  EXPECT_EQ(check_witness(c6, mono, {{0, 3}, WitnessMode::k_disjoint, {{0, 1, 2, 3}}}).reason,
            WitnessDefect::not_proper);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(check_witness(c5, VertexColoring::monochromatic(5), {{0, 2}, WitnessMode::geodesic, {{0, 4, 3, 2}}}).reason,
            WitnessDefect::not_proper);
  EXPECT_EQ(check_witness(c5, colors({1, 1, 2, 1, 2}), {{0, 2}, WitnessMode::geodesic, {{0, 4, 3, 2}}}).reason,
            WitnessDefect::not_geodesic);
  EXPECT_EQ(check_witness(c5, mono, {{0, 1}, WitnessMode::k_disjoint, {{0, 1}}}).reason,
            WitnessDefect::coloring_mismatch);
  EXPECT_EQ(check_witness(c5, colors({1, 1, 1, 1, 1}),
                          {{0, 2}, WitnessMode::geodesic, {{0, 1, 2}, {0, 1, 2}}})
                .reason,
            WitnessDefect::too_many_paths);
}

TEST(Parameter, Names) {
  EXPECT_EQ(Parameter::pvc().name(), "pvc");
  EXPECT_EQ(Parameter::pvc(2).name(), "pvc_2");
  EXPECT_EQ(Parameter::spvc().name(), "spvc");
}
