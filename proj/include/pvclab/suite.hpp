#ifndef PVCLAB_SUITE_HPP
#define PVCLAB_SUITE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvclab/colorverify.hpp"
#include "pvclab/graph.hpp"
#include "pvclab/graph6.hpp"
#include "pvclab/graph_core.hpp"
#include "pvclab/oracle.hpp"
#include "pvclab/products.hpp"
#include "pvclab/theorems.hpp"

namespace pvclab {

struct SuiteCheck {
  std::string group;
  std::string id;
  std::string instance;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.pass; }));
  }
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

struct SuiteOptions {
  int max_n = 6;                 // order bound for enumerated graph families
  std::uint64_t seed = 1;
  std::vector<std::string> only;  // group names; empty runs all
  bool parallel = true;
};

inline const std::array<std::string_view, 10>& suite_groups() {
  static const std::array<std::string_view, 10> groups{
      "base-characterization", "chain-inequalities", "distance-formulas", "join",
      "cartesian",             "lexicographic",      "strong",            "direct",
      "verifier-cross-validation", "graph6-roundtrip"};
  return groups;
}

namespace detail {

class CheckSink {
 public:
  explicit CheckSink(std::string group) : group_(std::move(group)) {}

  void equal(std::string id, std::string instance, long long expected, long long got) {
    push(std::move(id), std::move(instance), std::to_string(expected), std::to_string(got), expected == got);
  }
  void within(std::string id, std::string instance, Interval expected, int got) {
    push(std::move(id), std::move(instance), expected.to_string(), std::to_string(got), expected.contains(got));
  }
  void text(std::string id, std::string instance, std::string expected, std::string got) {
    const bool ok = expected == got;
    push(std::move(id), std::move(instance), std::move(expected), std::move(got), ok);
  }
  /// Runs `body`; an exception becomes a failed check instead of aborting the group.
  template <class F>
  void guarded(const std::string& id, const std::string& instance, F body) {
    try {
      body();
    } catch (const std::exception& e) {
      push(id, instance, "no error", std::string("error: ") + e.what(), false);
    }
  }
  std::vector<SuiteCheck> take() { return std::move(checks_); }

 private:
  void push(std::string id, std::string instance, std::string expected, std::string got, bool pass) {
    checks_.push_back({group_, std::move(id), std::move(instance), std::move(expected), std::move(got), pass});
  }
  std::string group_;
  std::vector<SuiteCheck> checks_;
};

inline std::string verdict(bool ok) { return ok ? "verified" : "rejected"; }

inline std::string report_verdict(const TheoremReport& r) {
  return r.verified ? "verified" : "rejected: " + r.failure;
}

inline std::string g6(const Graph& g) { return emit_graph6(g); }

inline std::vector<Graph> connected_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= std::min(max_n, 7); ++n) {
    for (auto& g : enumerate_connected(n)) out.push_back(std::move(g));
  }
  return out;
}

struct Named {
  std::string name;
  Graph graph;
};

inline Graph c5_with_chord() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}); }

// -- criterion 1 -------------------------------------------------------------

inline void base_characterization(CheckSink& out, const SuiteOptions& opt) {
  for (const Graph& g : connected_up_to(std::min(opt.max_n, 6))) {
    const std::string inst = g6(g);
    out.guarded("base.pvc", inst, [&] {
      out.equal("base.pvc", inst, *predicted_base(g, Parameter::pvc()), brute_pvc_k(g, 1).value);
    });
    out.guarded("base.spvc", inst, [&] {
      const int spvc = brute_spvc(g).value;
      if (auto predicted = predicted_base(g, Parameter::spvc())) {
        out.equal("base.spvc", inst, *predicted, spvc);
      } else {
        out.within("base.spvc", inst, Interval{2, g.order()}, spvc);
      }
    });
  }
}

// -- criterion 2 -------------------------------------------------------------

inline void chain_inequalities(CheckSink& out, const SuiteOptions& opt) {
  for (const Graph& g : connected_up_to(std::min(opt.max_n, 6))) {
    const std::string inst = g6(g);
    out.guarded("chain.order", inst, [&] {
      const int pvc = brute_pvc_k(g, 1).value;
      const int spvc = brute_spvc(g).value;
      const auto chi = chromatic_number(g);
      const bool ok = pvc <= spvc && spvc <= chi.chromatic_number;
      out.text("chain.order", inst, "pvc<=spvc<=chi",
               ok ? "pvc<=spvc<=chi"
                  : std::to_string(pvc) + "," + std::to_string(spvc) + "," + std::to_string(chi.chromatic_number));
      out.text("chain.proper-coloring-is-strong", inst, "verified",
               verdict(is_strong_proper_vertex_connected(g, VertexColoring(chi.coloring))));
    });
  }
}

// -- criterion 3 -------------------------------------------------------------

inline void distance_formulas(CheckSink& out, const SuiteOptions&) {
  const std::vector<Named> factors{{"P2", path_graph(2)},  {"P3", path_graph(3)},     {"P4", path_graph(4)},
                                   {"C3", cycle_graph(3)}, {"C4", cycle_graph(4)},    {"C5", cycle_graph(5)},
                                   {"K2", complete_graph(2)}, {"K3", complete_graph(3)}, {"K4", complete_graph(4)},
                                   {"K13", star_graph(4)}};
  for (auto kind : {ProductKind::cartesian, ProductKind::lexicographic, ProductKind::strong, ProductKind::direct}) {
    for (const auto& a : factors) {
      for (const auto& b : factors) {
        const std::string inst = std::string(to_string(kind)) + " " + a.name + "," + b.name;
        out.guarded("distance." + std::string(to_string(kind)), inst, [&] {
          auto rep = verify_distance_formula(kind, a.graph, b.graph);
          std::string got = "all " + std::to_string(rep.pairs_checked) + " pairs match";
          if (rep.counterexample) {
            got = "mismatch at (" + std::to_string(rep.counterexample->u) + "," +
                  std::to_string(rep.counterexample->v) + "): bfs " + rep.counterexample->bfs.to_string() +
                  " formula " + rep.counterexample->formula.to_string();
          }
          out.text("distance." + std::string(to_string(kind)), inst,
                   "all " + std::to_string(rep.pairs_checked) + " pairs match", got);
          if (kind == ProductKind::direct) {
            const bool expect = !(is_bipartite(a.graph) && is_bipartite(b.graph));
            out.text("distance.direct.connected", inst, expect ? "connected" : "disconnected",
                     is_connected(direct(a.graph, b.graph).graph) ? "connected" : "disconnected");
          }
        });
      }
    }
  }
}

// -- criterion 4 -------------------------------------------------------------

inline void join_checks(CheckSink& out, const SuiteOptions& opt) {
  std::vector<Graph> graphs;
  for (int n = 2; n <= std::min(4, opt.max_n); ++n) {
    for (auto& g : enumerate_graphs(n, false)) graphs.push_back(std::move(g));
  }
  for (const Graph& a : graphs) {
    for (const Graph& b : graphs) {
      const Graph joined = join(a, b).graph;
      const int kappa = vertex_connectivity(joined);
      for (int k : {2, 3}) {
        if (k > std::min(a.order(), b.order()) || k > kappa) continue;
        const std::string inst = g6(a) + " v " + g6(b) + " k=" + std::to_string(k);
        out.guarded("join.pvck", inst, [&] {
          auto rep = join_pvck(a, b, k);
          out.equal("join.pvck", inst, rep.predicted->lo, brute_pvc_k(joined, k).value);
          out.text("join.pvck.coloring", inst, "verified", report_verdict(rep));
        });
      }
    }
  }
  for (int n1 = 2; n1 <= 4; ++n1) {
    for (int n2 = n1; n2 <= 4; ++n2) {
      for (int k = 2; k <= n1; ++k) {
        const std::string inst = "K" + std::to_string(n1) + "," + std::to_string(n2) + " k=" + std::to_string(k);
        out.guarded("lemma.J1.bipartite", inst, [&] {
          auto rep = complete_bipartite_pvck(n1, n2, k);
          out.equal("lemma.J1.bipartite", inst, 2, brute_pvc_k(rep.graph, k).value);
          out.text("lemma.J1.bipartite.coloring", inst, "verified", report_verdict(rep));
        });
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const std::string inst = "K" + std::to_string(n) + " k=" + std::to_string(k);
      out.guarded("lemma.J1.complete", inst, [&] {
        auto rep = complete_pvck(n, k);
        out.equal("lemma.J1.complete", inst, 1, brute_pvc_k(rep.graph, k).value);
        out.text("lemma.J1.complete.coloring", inst, "verified", report_verdict(rep));
      });
    }
  }
}

// -- criterion 5 -------------------------------------------------------------

inline void cartesian_checks(CheckSink& out, const SuiteOptions&) {
  std::vector<Named> small{{"K2", complete_graph(2)}, {"P3", path_graph(3)}, {"K3", complete_graph(3)}};
  std::vector<std::pair<Named, Named>> pairs;
  for (const auto& a : small) {
    for (const auto& b : small) pairs.emplace_back(a, b);
  }
  pairs.emplace_back(Named{"K2", complete_graph(2)}, Named{"K4", complete_graph(4)});
  pairs.emplace_back(Named{"P4", path_graph(4)}, Named{"K2", complete_graph(2)});
  pairs.emplace_back(Named{"P3", path_graph(3)}, Named{"P3", path_graph(3)});
  pairs.emplace_back(Named{"P4", path_graph(4)}, Named{"P4", path_graph(4)});
  OracleOptions wide;
  wide.max_order = 16;

  for (const auto& [a, b] : pairs) {
    const std::string inst = a.name + " x " + b.name;
    out.guarded("cart.pvc2", inst, [&] {
      auto rep = cartesian_pvc2(a.graph, b.graph);
      out.equal("cart.pvc2", inst, rep.predicted->lo, brute_pvc_k(rep.graph, 2, wide).value);
      out.text("cart.pvc2.coloring", inst, "verified", report_verdict(rep));
    });
    out.guarded("cart.pvc", inst, [&] {
      auto rep = cartesian_pvc(a.graph, b.graph);
      out.equal("cart.pvc", inst, rep.predicted->lo, brute_pvc_k(rep.graph, 1).value);
    });
    out.guarded("cart.spvc", inst, [&] {
      auto rep = cartesian_spvc_bound(a.graph, b.graph);
      out.within("cart.spvc", inst, *rep.predicted, brute_spvc(rep.graph, wide).value);
      out.text("cart.spvc.coloring", inst, "verified", report_verdict(rep));
    });
  }
}

// -- criterion 6 -------------------------------------------------------------

inline void lexicographic_checks(CheckSink& out, const SuiteOptions&) {
  const std::vector<std::pair<Named, Named>> pairs{
      {{"P4", path_graph(4)}, {"K2", complete_graph(2)}},  {{"C5", cycle_graph(5)}, {"K2", complete_graph(2)}},
      {{"K3", complete_graph(3)}, {"P3", path_graph(3)}},  {{"P3", path_graph(3)}, {"P3", path_graph(3)}},
      {{"K2", complete_graph(2)}, {"K2", complete_graph(2)}}};
  for (const auto& [a, b] : pairs) {
    const std::string inst = a.name + " o " + b.name;
    out.guarded("lex.pvc", inst, [&] {
      auto rep = lex_pvc(a.graph, b.graph);
      out.equal("lex.pvc", inst, rep.predicted->lo, brute_pvc_k(rep.graph, 1).value);
      out.text("lex.pvc.coloring", inst, "verified", report_verdict(rep));
    });
    out.guarded("lex.spvc", inst, [&] {
      auto rep = lex_spvc(a.graph, b.graph);
      out.equal("lex.spvc", inst, rep.predicted->lo, brute_spvc(rep.graph).value);
      out.text("lex.spvc.coloring", inst, "verified", report_verdict(rep));
      if (diameter(a.graph) >= Distance{3}) {
        out.equal("lex.spvc.index-parity-colors", inst, 2, rep.coloring->palette_size());
      }
    });
    out.guarded("lex.pvc2", inst, [&] {
      auto rep = lex_pvc2(a.graph, b.graph);
      out.equal("lex.pvc2", inst, rep.predicted->lo, brute_pvc_k(rep.graph, 2).value);
      out.text("lex.pvc2.coloring", inst, "verified", report_verdict(rep));
    });
  }
}

// -- criterion 7 -------------------------------------------------------------

inline void strong_checks(CheckSink& out, const SuiteOptions&) {
  const Graph c4 = cycle_graph(4);
  const Graph c5 = cycle_graph(5);
  const Graph p3 = path_graph(3);
  const Graph p4 = path_graph(4);
  OracleOptions wide;
  wide.max_order = 20;

  for (const auto& [name, a, b] : std::vector<std::tuple<std::string, Graph, Graph>>{
           {"C4 s C4", c4, c4}, {"P3 s P3", p3, p3}}) {
    out.guarded("strong.pvc2", name, [&] {
      auto rep = strong_pvc2(a, b);
      out.equal("strong.pvc2", name, rep.predicted->lo, brute_pvc_k(rep.graph, 2, wide).value);
      out.text("strong.pvc2.coloring", name, "verified", report_verdict(rep));
    });
  }

  // C5 s C5 (25 vertices): a verified 2-coloring plus a failing 1-coloring pins the value at 2.
  out.guarded("strong.pvc2", "C5 s C5", [&] {
    auto rep = strong_pvc2(c5, c5);
    const ProductGraph p = strong(c5, c5);
    out.equal("strong.pvc2.predicted", "C5 s C5", 2, rep.predicted->lo);
    out.text("strong.pvc2.coloring", "C5 s C5", "verified", report_verdict(rep));
    out.equal("strong.pvc2.coloring-colors", "C5 s C5", 2, rep.coloring->palette_size());
    const Vertex x = p.vertex_of(0, 0);
    const Vertex y = p.vertex_of(2, 2);
    out.equal("strong.pvc2.blocked-pair-length2-paths", "C5 s C5 (0,0)-(2,2)", 1, common_neighbor_count(p.graph, x, y));
    out.text("strong.pvc2.monochromatic", "C5 s C5", "rejected",
             verdict(is_proper_vertex_k_connected(p.graph, VertexColoring::monochromatic(p.order()), 2)));
  });

  out.guarded("strong.spvc", "C5 s P4", [&] {
    auto rep = strong_spvc(c5, p4);
    const int oracle = brute_spvc(rep.graph, wide).value;
    out.within("strong.spvc", "C5 s P4", *rep.predicted, oracle);
    out.equal("strong.spvc.sharp", "C5 s P4 vs P4", brute_spvc(p4).value, oracle);
    out.text("strong.spvc.coloring", "C5 s P4", "verified", report_verdict(rep));
  });

  for (const auto& [name, a, b] : std::vector<std::tuple<std::string, Graph, Graph>>{
           {"P4 s P3", p4, p3}, {"C4 s K2", c4, complete_graph(2)}, {"K3 s K2", complete_graph(3), complete_graph(2)}}) {
    out.guarded("strong.pvc", name, [&] {
      auto rep = strong_pvc(a, b);
      out.equal("strong.pvc", name, rep.predicted->lo, brute_pvc_k(rep.graph, 1).value);
      out.text("strong.pvc.coloring", name, "verified", report_verdict(rep));
    });
  }
}

// -- criterion 8 -------------------------------------------------------------

inline void direct_checks(CheckSink& out, const SuiteOptions& opt) {
  const auto factors = connected_up_to(std::min(opt.max_n, 5));
  for (const Graph& a : factors) {
    for (const Graph& b : factors) {
      if (is_bipartite(a) && is_bipartite(b)) continue;
      const std::string inst = g6(a) + " x " + g6(b);
      out.guarded("direct.lemma-diameter-two", inst, [&] {
        const bool predicted = direct_diameter_two(a, b);
        const bool actual = diameter(direct(a, b).graph) == Distance{2};
        out.text("direct.lemma-diameter-two", inst, predicted ? "diam 2" : "diam != 2", actual ? "diam 2" : "diam != 2");
      });
    }
  }

  OracleOptions wide;
  wide.max_order = 16;
  for (int n : {3, 4}) {
    for (int m : {3, 4}) {
      const std::string inst = "K" + std::to_string(n) + " x K" + std::to_string(m);
      for (auto param : {Parameter::spvc(), Parameter::pvc(2)}) {
        out.guarded("direct.D2." + param.name(), inst, [&] {
          auto rep = direct_complete_cases(n, m, param);
          out.equal("direct.D2." + param.name(), inst, 1,
                    param.is_spvc() ? brute_spvc(rep.graph, wide).value : brute_pvc_k(rep.graph, 2, wide).value);
          out.equal("direct.D2." + param.name() + ".predicted", inst, 1, rep.predicted->lo);
          out.text("direct.D2." + param.name() + ".coloring", inst, "verified", report_verdict(rep));
        });
      }
    }
  }
  for (int m : {3, 4, 5}) {
    const std::string inst = "K2 x K" + std::to_string(m);
    for (auto param : {Parameter::spvc(), Parameter::pvc(2)}) {
      out.guarded("direct.D2." + param.name(), inst, [&] {
        auto rep = direct_complete_cases(2, m, param);
        out.equal("direct.D2." + param.name(), inst, 2,
                  param.is_spvc() ? brute_spvc(rep.graph).value : brute_pvc_k(rep.graph, 2).value);
        out.equal("direct.D2." + param.name() + ".predicted", inst, 2, rep.predicted->lo);
        out.text("direct.D2." + param.name() + ".coloring", inst, "verified", report_verdict(rep));
      });
    }
  }

  struct D3Case {
    std::string name;
    int n;
    Graph h;
    Interval colors;
  };
  const std::vector<D3Case> d3{{"K2 x C5", 2, cycle_graph(5), Interval::point(2)},
                               {"K2 x C7", 2, cycle_graph(7), Interval::point(2)},
                               {"K4 x C5", 4, cycle_graph(5), Interval::point(2)},
                               {"K5 x P4", 5, path_graph(4), Interval::point(2)},
                               {"K3 x P4", 3, path_graph(4), Interval::point(2)},
                               {"K3 x C5+chord", 3, c5_with_chord(), Interval{1, 3}}};
  for (const auto& c : d3) {
    out.guarded("direct.D3", c.name, [&] {
      auto rep = direct_kn_times_h(c.n, c.h);
      out.text("direct.D3.coloring", c.name, "verified", report_verdict(rep));
      out.within("direct.D3.colors", c.name, c.colors, rep.coloring->palette_size());
      if (rep.predicted->is_point() && rep.graph.order() <= 14) {
        out.equal("direct.D3", c.name, rep.predicted->lo, brute_spvc(rep.graph).value);
      }
    });
  }

  for (const auto& [name, a, b] : std::vector<std::tuple<std::string, Graph, Graph>>{
           {"K3 x K3", complete_graph(3), complete_graph(3)},
           {"K3 x P3", complete_graph(3), path_graph(3)},
           {"K4 x C5", complete_graph(4), cycle_graph(5)}}) {
    out.guarded("direct.pvc", name, [&] {
      auto rep = direct_pvc_spvc(a, b);
      out.text("direct.pvc.coloring", name, "verified", report_verdict(rep));
      if (rep.graph.order() <= 16) out.equal("direct.pvc", name, rep.predicted->lo, brute_pvc_k(rep.graph, 1).value);
    });
  }
}

// -- criterion 9 -------------------------------------------------------------

/// Every simple u-v path, by plain DFS.
inline void all_simple_paths(const Graph& g, Vertex u, Vertex v, const std::function<void(const Path&)>& visit) {
  Path path{u};
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  used[u] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (x == v) {
      visit(path);
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (used[y]) continue;
      used[y] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      used[y] = 0;
    }
  };
  dfs(u);
}

inline bool internally_proper(const Path& p, const VertexColoring& c) {
  for (std::size_t i = 1; i + 2 < p.size(); ++i) {
    if (c[p[i]] == c[p[i + 1]]) return false;
  }
  return true;
}

inline void verifier_cross_validation(CheckSink& out, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  for (const Graph& g : connected_up_to(std::min(opt.max_n, 6))) {
    const DistanceMatrix dist(g);
    for (int palette = 1; palette <= 3; ++palette) {
      const std::string inst = g6(g) + " palette " + std::to_string(palette);
      int agree = 0;
      std::string first_disagreement;
      std::uniform_int_distribution<int> pick(1, palette);
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> colors(static_cast<std::size_t>(g.order()));
        for (auto& x : colors) x = pick(rng);
        const VertexColoring c(colors);
        bool same = true;
        for (Vertex u = 0; u < g.order() && same; ++u) {
          for (Vertex v = u + 1; v < g.order() && same; ++v) {
            bool any = false;
            bool any_geodesic = false;
            const auto d = static_cast<std::size_t>(dist(u, v).value());
            all_simple_paths(g, u, v, [&](const Path& p) {
              if (!internally_proper(p, c)) return;
              any = true;
              if (p.size() == d + 1) any_geodesic = true;
            });
            if (any != exists_proper_path(g, c, u, v) || any_geodesic != exists_proper_geodesic(g, c, u, v)) {
              same = false;
              first_disagreement = "pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
            }
          }
        }
        if (same) ++agree;
      }
      out.text("verifier.agreement", inst, "200/200 colorings agree",
               agree == 200 ? "200/200 colorings agree"
                            : std::to_string(agree) + "/200 colorings agree, first at " + first_disagreement);
    }
  }
}

// -- criterion 10 ------------------------------------------------------------

inline void graph6_roundtrip(CheckSink& out, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::array<int, 33> total{};
  std::array<int, 33> identical{};
  for (int i = 0; i < 1000; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 32)(rng);
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges);
    const std::string text = emit_graph6(g);
    ++total[n];
    try {
      const Graph back = parse_graph6(text);
      if (back == g && emit_graph6(back) == text) ++identical[n];
    } catch (const graph6_error&) {
    }
  }
  for (int n = 1; n <= 32; ++n) {
    if (total[n] == 0) continue;
    const std::string inst = "n=" + std::to_string(n);
    const std::string want = std::to_string(total[n]) + "/" + std::to_string(total[n]) + " identical";
    out.text("graph6.roundtrip", inst, want, std::to_string(identical[n]) + "/" + std::to_string(total[n]) + " identical");
  }
}

using GroupRunner = void (*)(CheckSink&, const SuiteOptions&);

inline GroupRunner group_runner(std::string_view name) {
  if (name == "base-characterization") return base_characterization;
  if (name == "chain-inequalities") return chain_inequalities;
  if (name == "distance-formulas") return distance_formulas;
  if (name == "join") return join_checks;
  if (name == "cartesian") return cartesian_checks;
  if (name == "lexicographic") return lexicographic_checks;
  if (name == "strong") return strong_checks;
  if (name == "direct") return direct_checks;
  if (name == "verifier-cross-validation") return verifier_cross_validation;
  if (name == "graph6-roundtrip") return graph6_roundtrip;
  return nullptr;
}

}  // namespace detail

/// Runs one named group of consistency checks.
inline std::vector<SuiteCheck> run_suite_group(std::string_view group, const SuiteOptions& opt = {}) {
  auto runner = detail::group_runner(group);
  if (!runner) throw precondition_error("unknown suite group: " + std::string(group));
  detail::CheckSink sink{std::string(group)};
  runner(sink, opt);
  return sink.take();
}

/// Runs the selected groups (all by default). Groups may run concurrently;
/// the report always lists them in the fixed group order.
inline SuiteReport run_suite(const SuiteOptions& opt = {}) {
  for (const auto& name : opt.only) {
    if (!detail::group_runner(name)) throw precondition_error("unknown suite group: " + name);
  }
  std::vector<std::string_view> selected;
  for (auto g : suite_groups()) {
    if (opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), g) != opt.only.end()) selected.push_back(g);
  }
  std::vector<std::future<std::vector<SuiteCheck>>> pending;
  for (auto g : selected) {
    pending.push_back(std::async(opt.parallel ? std::launch::async : std::launch::deferred,
                                 [g, &opt] { return run_suite_group(g, opt); }));
  }
  SuiteReport report;
  for (auto& f : pending) {
    auto checks = f.get();
    report.checks.insert(report.checks.end(), std::make_move_iterator(checks.begin()),
                         std::make_move_iterator(checks.end()));
  }
  return report;
}

}  // namespace pvclab

#endif  // PVCLAB_SUITE_HPP
