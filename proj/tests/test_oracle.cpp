#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "pvclab/oracle.hpp"
#include "pvclab/products.hpp"

using namespace pvclab;

TEST(Generators, Families) {
  EXPECT_EQ(path_graph(4).size(), 3U);
  EXPECT_EQ(cycle_graph(5).size(), 5U);
  EXPECT_EQ(complete_bipartite_graph(3, 3).size(), 9U);
  EXPECT_EQ(star_graph(3).order(), 4);
  EXPECT_EQ(empty_graph(4).size(), 0U);
  EXPECT_EQ(petersen_graph().size(), 15U);
  EXPECT_EQ(random_tree(9, 4), random_tree(9, 4));
  EXPECT_EQ(random_tree(9, 4).size(), 8U);
  EXPECT_TRUE(is_connected(random_tree(9, 4)));
  EXPECT_EQ(generate(Family::complete_bipartite, {2, 3}), complete_bipartite_graph(2, 3));
  EXPECT_THROW(generate(Family::cycle, {2}), precondition_error);
  EXPECT_THROW(generate(Family::complete_bipartite, {2}), precondition_error);
  EXPECT_EQ(parse_family("petersen"), Family::petersen);
}

TEST(Enumeration, KnownCounts) {
  const int connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  const int all[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_connected(n).size()), connected[n]) << n;
    EXPECT_EQ(static_cast<int>(enumerate_graphs(n, false).size()), all[n]) << n;
  }
  EXPECT_THROW(enumerate_connected(8), cap_exceeded);
}

TEST(Enumeration, ClassesArePairwiseNonIsomorphicAndComplete) {
  for (int n = 1; n <= 5; ++n) {
    const auto reps = enumerate_graphs(n, false);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(brute::isomorphic(reps[i], reps[j]));
    for (const Graph& g : brute::all_labeled(n)) {
      int hits = 0;
      for (const Graph& r : reps) hits += brute::isomorphic(g, r) ? 1 : 0;
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(Oracle, SpecExamples) {
  EXPECT_EQ(brute_pvc_k(complete_graph(5), 3).value, 1);
  EXPECT_EQ(brute_pvc_k(cycle_graph(6), 2).value, 2);
  EXPECT_EQ(brute_pvc_k(path_graph(4), 1).value, 2);
  EXPECT_EQ(brute_spvc(cycle_graph(5)).value, 1);
  EXPECT_EQ(brute_spvc(path_graph(4)).value, 2);
  EXPECT_EQ(brute_spvc(direct(complete_graph(2), complete_graph(4)).graph).value, 2);
  auto k4 = brute_spvc(complete_graph(4));
  EXPECT_EQ(k4.value, 0);
  EXPECT_FALSE(k4.optimal_coloring.has_value());
}

TEST(Oracle, MatchesRawColoringSearch) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      EXPECT_EQ(brute_pvc_k(g, 1).value, brute::parameter(g, 1, false));
      EXPECT_EQ(brute_spvc(g).value, brute::parameter(g, 1, true));
      if (vertex_connectivity(g) >= 2) {
        EXPECT_EQ(brute_pvc_k(g, 2).value, brute::parameter(g, 2, false));
      }
    }
  }
}

TEST(Oracle, CertificateAndMinimality) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      for (auto p : {Parameter::pvc(1), Parameter::spvc(), Parameter::pvc(2)}) {
        if (!p.is_spvc() && p.k > vertex_connectivity(g)) continue;
        auto r = p.is_spvc() ? brute_spvc(g) : brute_pvc_k(g, p.k);
        if (r.value == 0) continue;
        ASSERT_TRUE(r.optimal_coloring.has_value());
        EXPECT_EQ(r.optimal_coloring->palette_size(), r.value);
        EXPECT_TRUE(satisfies(g, *r.optimal_coloring, p));
        // second pass: no palette below the optimum works
        for (int q = 1; q < r.value; ++q) EXPECT_FALSE(feasible_with_palette(g, p, q));
      }
    }
  }
}

TEST(Oracle, DeterministicAcrossWorkerCounts) {
  const Graph g = strong(cycle_graph(5), path_graph(3)).graph;
  OracleOptions one;
  one.workers = 1;
  one.max_order = 15;
  OracleOptions four = one;
  four.workers = 4;
  auto a = brute_spvc(g, one);
  auto b = brute_spvc(g, four);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.optimal_coloring, b.optimal_coloring);
}

TEST(Oracle, CapsAreReported) {
  EXPECT_THROW(brute_pvc_k(cycle_graph(13), 2), cap_exceeded);
  EXPECT_THROW(brute_spvc(path_graph(15)), cap_exceeded);
  OracleOptions wide;
  wide.max_order = 15;
  EXPECT_EQ(brute_spvc(path_graph(15), wide).value, 2);
  OracleOptions tight;
  tight.palette_cap = 1;
  EXPECT_THROW(brute_spvc(path_graph(4), tight), cap_exceeded);
  EXPECT_THROW(brute_pvc_k(path_graph(4), 2), precondition_error);
}

TEST(Oracle, LemmaInstances) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 2; k <= n - 1; ++k) EXPECT_EQ(brute_pvc_k(complete_graph(n), k).value, 1);
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int k = 2; k <= a; ++k) EXPECT_EQ(brute_pvc_k(complete_bipartite_graph(a, b), k).value, 2);
}
