#include <gtest/gtest.h>

#include <random>

#include "pvclab/oracle.hpp"
#include "pvclab/theorems.hpp"

using namespace pvclab;

namespace {

void expect_point(const TheoremReport& r, int value) {
  ASSERT_TRUE(r.predicted.has_value()) << r.theorem_id;
  EXPECT_EQ(*r.predicted, Interval::point(value)) << r.theorem_id;
  EXPECT_TRUE(r.verified) << r.theorem_id << ": " << r.failure;
  ASSERT_TRUE(r.coloring.has_value());
  EXPECT_EQ(r.coloring->palette_size(), std::max(1, value));
}

int oracle(const TheoremReport& r) {
  OracleOptions opt;
  opt.max_order = 20;
  return r.parameter.is_spvc() ? brute_spvc(r.graph, opt).value : brute_pvc_k(r.graph, r.parameter.k, opt).value;
}

const Graph K2 = complete_graph(2), K3 = complete_graph(3), K4 = complete_graph(4);
const Graph P3 = path_graph(3), P4 = path_graph(4), C4 = cycle_graph(4), C5 = cycle_graph(5);

}  // namespace

TEST(Base, Examples) {
  EXPECT_EQ(predicted_base(complete_graph(6), Parameter::pvc()), 0);
  EXPECT_EQ(predicted_base(C5, Parameter::pvc()), 1);
  EXPECT_EQ(predicted_base(P4, Parameter::pvc()), 2);
  EXPECT_FALSE(predicted_base(P4, Parameter::spvc()).has_value());
  EXPECT_THROW(predicted_base(Graph(1), Parameter::pvc()), precondition_error);
  EXPECT_THROW(predicted_base(Graph(3, {{0, 1}}), Parameter::pvc()), precondition_error);
  expect_point(base_report(P4, Parameter::pvc()), 2);
  auto unknown = base_report(P4, Parameter::spvc());
  EXPECT_FALSE(unknown.predicted.has_value());
  EXPECT_FALSE(unknown.verified);
}

TEST(JoinLemma, Examples) {
  expect_point(complete_pvck(5, 4), 1);
  expect_point(complete_bipartite_pvck(3, 3, 2), 2);
  expect_point(complete_bipartite_pvck(2, 5, 2), 2);
  EXPECT_THROW(complete_pvck(5, 5), precondition_error);
  EXPECT_THROW(complete_bipartite_pvck(3, 2, 2), precondition_error);
  expect_point(join_pvck(empty_graph(3), empty_graph(3), 2), 2);
  expect_point(join_pvck(K2, K2, 2), 1);
  expect_point(join_pvck(C4, Graph(1), 1), 1);
  expect_point(join_spvc(C4, Graph(1)), 1);
  EXPECT_THROW(join_pvck(K2, Graph(1), 2), precondition_error);
}

TEST(Cartesian, Examples) {
  expect_point(cartesian_pvc2(K3, K3), 1);
  expect_point(cartesian_pvc2(K2, K4), 2);
  expect_point(cartesian_pvc2(P3, P3), 2);
  expect_point(cartesian_pvc(K3, K4), 1);
  expect_point(cartesian_pvc(P4, K2), 2);
  expect_point(cartesian_spvc_bound(K3, K4), 1);
  auto pk = cartesian_spvc_bound(P4, K2);
  EXPECT_EQ(*pk.predicted, (Interval{2, 2}));
  EXPECT_TRUE(pk.verified);
  auto pp = cartesian_spvc_bound(P4, P4);
  EXPECT_EQ(*pp.predicted, (Interval{2, 4}));
  EXPECT_TRUE(pp.verified);
  EXPECT_LE(pp.coloring->palette_size(), 4);
  EXPECT_THROW(cartesian_pvc(Graph(3, {{0, 1}}), K2), precondition_error);
}

TEST(Lexicographic, Examples) {
  auto r = lex_spvc(P4, K2);
  expect_point(r, 2);
  expect_point(lex_pvc(K3, P3), 1);
  expect_point(lex_pvc2(C5, K2), 1);
  expect_point(lex_pvc(K2, K2), 0);
  EXPECT_THROW(lex_pvc2(P4, Graph(2)), precondition_error);
  expect_point(lex_spvc(P4, Graph(3)), 2);  // H need not be connected
}

TEST(Strong, Examples) {
  expect_point(strong_pvc2(C4, C4), 1);
  expect_point(strong_pvc2(C5, C5), 2);
  auto s = strong_spvc(C5, P4);
  EXPECT_EQ(*s.predicted, (Interval{2, 2}));
  EXPECT_TRUE(s.verified);
  auto both = strong_spvc(P4, path_graph(5));
  EXPECT_EQ(*both.predicted, (Interval{2, 4}));
  EXPECT_TRUE(both.verified);
  expect_point(strong_spvc(K3, K2), 0);
  expect_point(strong_pvc(C5, C4), 1);
}

TEST(Direct, Examples) {
  expect_point(direct_pvc_spvc(K3, K3), 1);
  expect_point(direct_pvc_spvc(K3, K3, Parameter::spvc()), 1);
  expect_point(direct_pvc_spvc(K3, P3), 2);
  expect_point(direct_pvc_spvc(K4, C5), 2);
  auto none = direct_pvc_spvc(K3, P3, Parameter::spvc());
  EXPECT_FALSE(none.predicted.has_value());
  EXPECT_THROW(direct_pvc_spvc(P3, C4), precondition_error);
  expect_point(direct_complete_cases(3, 3, Parameter::spvc()), 1);
  expect_point(direct_complete_cases(3, 3, Parameter::pvc(2)), 1);
  expect_point(direct_complete_cases(2, 4, Parameter::spvc()), 2);
  expect_point(direct_complete_cases(2, 4, Parameter::pvc(2)), 2);
  EXPECT_THROW(direct_complete_cases(2, 2, Parameter::spvc()), precondition_error);
  expect_point(direct_kn_times_h(3, P4), 2);
  expect_point(direct_kn_times_h(2, C5), 2);
  expect_point(direct_kn_times_h(4, C5), 2);
  EXPECT_THROW(direct_kn_times_h(2, P4), precondition_error);
  EXPECT_THROW(direct_kn_times_h(3, K3), precondition_error);
  auto chord = direct_kn_times_h(3, Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}));
  EXPECT_EQ(*chord.predicted, (Interval{2, 3}));
  EXPECT_TRUE(chord.verified);
}

// Lifted geodesics for K_n x H on many random H: every witness re-checks.
TEST(Direct, LiftedGeodesicsOnRandomFactors) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int order = 3 + trial % 6;
    const Graph tree = random_tree(order, trial);
    std::vector<Edge> e = tree.edges();
    std::bernoulli_distribution coin(0.25);
    for (Vertex u = 0; u < order; ++u)
      for (Vertex v = u + 1; v < order; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    const Graph h(order, e);
    if (diameter(h) < Distance{2}) continue;
    for (int n = 2; n <= 6; ++n) {
      if (n == 2 && is_bipartite(h)) continue;
      auto r = direct_kn_times_h(n, h);
      EXPECT_TRUE(r.verified) << "n=" << n << " H=" << trial << ": " << r.failure;
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

// Interval and point predictions against the oracle on small factor pairs.
TEST(Theorems, PredictionsContainOracleValue) {
  const std::vector<Graph> factors{K2, P3, K3, C4};
  for (const Graph& a : factors) {
    for (const Graph& b : factors) {
      std::vector<TheoremReport> reports{cartesian_pvc(a, b), cartesian_pvc2(a, b), cartesian_spvc_bound(a, b),
                                         lex_pvc(a, b),       lex_spvc(a, b),       lex_pvc2(a, b),
                                         strong_pvc(a, b),    strong_pvc2(a, b),    strong_spvc(a, b)};
      if (!(is_bipartite(a) && is_bipartite(b))) reports.push_back(direct_pvc_spvc(a, b));
      for (const auto& r : reports) {
        ASSERT_TRUE(r.predicted) << r.theorem_id;
        EXPECT_TRUE(r.verified) << r.theorem_id << ": " << r.failure;
        EXPECT_TRUE(r.predicted->contains(oracle(r))) << r.theorem_id << " " << r.inputs[0] << " / " << r.inputs[1];
        if (r.predicted->is_point()) {
          EXPECT_EQ(r.coloring->distinct_colors(), std::max(1, r.predicted->lo));
        }
      }
    }
  }
}

TEST(Theorems, ChainInequalityOnReports) {
  for (const auto& [a, b] : std::vector<std::pair<Graph, Graph>>{{P4, K2}, {C5, K2}, {P3, P3}, {K3, P3}}) {
    const int pvc = lex_pvc(a, b).predicted->lo;
    const int spvc = lex_spvc(a, b).predicted->lo;
    const int chi = chromatic_number(lexicographic(a, b).graph).chromatic_number;
    EXPECT_LE(pvc, spvc);
    EXPECT_LE(spvc, chi);
  }
}

TEST(Theorems, FinalizeCatchesWrongColorings) {
  auto r = cartesian_pvc2(P3, P3);
  r.coloring = VertexColoring::monochromatic(r.graph.order());
  r.witnesses.clear();
  r.predicted = Interval::point(1);
  EXPECT_FALSE(detail::finalize(r).verified);
  auto s = strong_pvc2(C5, C5);
  s.witnesses.front().paths.front().pop_back();
  EXPECT_FALSE(detail::finalize(s).verified);
}
