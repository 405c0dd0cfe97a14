#include <gtest/gtest.h>

#include <random>

#include "pvclab/graph6.hpp"
#include "pvclab/oracle.hpp"

using namespace pvclab;

TEST(Graph6, HandDecodedExamples) {
  // "D?{": n = 'D'-63 = 5; bits 000000 111100 over pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),...
  const Graph star = parse_graph6("D?{");
  EXPECT_EQ(star.order(), 5);
  EXPECT_EQ(star.edges(), (std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("A?"), empty_graph(2));
  EXPECT_EQ(emit_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(emit_graph6(Graph(1)), "@");
}

TEST(Graph6, HeaderAndNewlineAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), complete_graph(2));
  EXPECT_EQ(parse_graph6("A_\r\n"), complete_graph(2));
}

TEST(Graph6, MalformedInputsRejected) {
  EXPECT_THROW(parse_graph6(""), graph6_error);
  EXPECT_THROW(parse_graph6("?"), graph6_error);      // n = 0
  EXPECT_THROW(parse_graph6("A"), graph6_error);      // missing body
  EXPECT_THROW(parse_graph6("A__"), graph6_error);    // extra byte
  EXPECT_THROW(parse_graph6("A`"), graph6_error);     // padding bit set
  EXPECT_THROW(parse_graph6("A "), graph6_error);     // byte below 63
  EXPECT_THROW(parse_graph6("A\x7f"), graph6_error);  // byte above 126
  EXPECT_THROW(parse_graph6("~??A_"), graph6_error);  // long form for small n
}

TEST(Graph6, LongOrderForm) {
  const Graph g = path_graph(63);
  const std::string text = emit_graph6(g);
  EXPECT_EQ(text.substr(0, 4), "~??~");
  EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 32);
    std::bernoulli_distribution coin(static_cast<double>(rng() % 100) / 100.0);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    const Graph g(n, e);
    const std::string text = emit_graph6(g);
    const Graph back = parse_graph6(text);
    ASSERT_EQ(back, g);
    ASSERT_EQ(emit_graph6(back), text);
  }
}
