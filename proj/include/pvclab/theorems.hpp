#ifndef PVCLAB_THEOREMS_HPP
#define PVCLAB_THEOREMS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvclab/colorverify.hpp"
#include "pvclab/errors.hpp"
#include "pvclab/graph.hpp"
#include "pvclab/graph6.hpp"
#include "pvclab/graph_core.hpp"
#include "pvclab/oracle.hpp"
#include "pvclab/products.hpp"

namespace pvclab {

/// Closed integer range; a point value has lo == hi.
struct Interval {
  int lo = 0;
  int hi = 0;

  static Interval point(int v) { return {v, v}; }
  bool is_point() const { return lo == hi; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  std::string to_string() const {
    return is_point() ? std::to_string(lo) : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * Outcome of running one theorem on concrete inputs: the predicted value
 * (or none when the theorem makes no prediction), the coloring its proof
 * constructs on `graph`, certificates for every vertex pair, and whether
 * everything re-verified.
 *
 * A predicted value of 0 (complete graphs) is reported as such, while the
 * attached coloring uses one color: a realizable coloring must color every
 * vertex.
 */
struct TheoremReport {
  std::string theorem_id;
  Parameter parameter;
  std::vector<std::string> inputs;
  std::optional<Interval> predicted;
  Graph graph;
  std::optional<VertexColoring> coloring;
  std::vector<Witness> witnesses;
  bool verified = false;
  std::string failure;  // first reason verification failed, if any
  std::vector<std::string> notes;
};

/// A coloring making a factor strong proper vertex-connected, with its
/// palette size (0 for complete factors, whose coloring still uses 1 color).
struct StrongColoring {
  int value = 0;
  VertexColoring coloring;
};

inline StrongColoring optimal_strong_coloring(const Graph& g, const OracleOptions& opt = {}) {
  auto r = brute_spvc(g, opt);
  if (r.value == 0) return {0, VertexColoring::monochromatic(g.order())};
  return {r.value, *r.optimal_coloring};
}

namespace detail {

inline std::string describe(char name, const Graph& g) {
  return std::string(1, name) + ": n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) +
         " g6=" + emit_graph6(g);
}

inline void require_nontrivial_connected(const Graph& g, const char* what) {
  if (g.order() < 2) throw precondition_error(std::string(what) + " must be nontrivial");
  if (!is_connected(g)) throw precondition_error(std::string(what) + " must be connected");
}

inline int diam_value(const Graph& g) { return static_cast<int>(diameter(g).value()); }

/// Colors every vertex of a product by a function of its coordinates.
template <class F>
VertexColoring coordinate_coloring(const ProductGraph& p, F color_of) {
  std::vector<int> colors(static_cast<std::size_t>(p.order()));
  for (Vertex v = 0; v < p.order(); ++v) {
    auto [g, h] = p.coordinates(v);
    colors[v] = color_of(g, h);
  }
  return VertexColoring(std::move(colors));
}

/// Spanning-tree parity coloring: 1 when d_S(g,g0) and d_T(h,h0) have the
/// same parity, 2 otherwise. Along any path that moves one tree step at a
/// time in one coordinate the colors alternate.
struct TreePair {
  SpanningTree s;
  SpanningTree t;
};

inline TreePair tree_pair(const Graph& a, const Graph& b) { return {spanning_tree(a, 0), spanning_tree(b, 0)}; }

inline VertexColoring tree_parity_coloring(const ProductGraph& p, const TreePair& trees) {
  return coordinate_coloring(p, [&](Vertex g, Vertex h) {
    return (trees.s.depth[g] % 2 == trees.t.depth[h] % 2) ? 1 : 2;
  });
}

inline Vertex tree_neighbor(const SpanningTree& st, Vertex v) {
  return st.parent[v] >= 0 ? st.parent[v] : st.tree.neighbors(v).front();
}

/// Two disjoint paths inside S x T (Cartesian), read off tree paths.
inline Witness cartesian_tree_witness(const ProductGraph& p, const TreePair& trees, Vertex a, Vertex b) {
  auto [g, h] = p.coordinates(a);
  auto [g2, h2] = p.coordinates(b);
  Path p1;
  Path p2;
  if (g == g2) {
    const Path hp = tree_path(trees.t, h, h2);
    const Vertex gs = tree_neighbor(trees.s, g);
    for (Vertex x : hp) p1.push_back(p.vertex_of(g, x));
    p2.push_back(a);
    for (Vertex x : hp) p2.push_back(p.vertex_of(gs, x));
    p2.push_back(b);
  } else if (h == h2) {
    const Path gp = tree_path(trees.s, g, g2);
    const Vertex hs = tree_neighbor(trees.t, h);
    for (Vertex x : gp) p1.push_back(p.vertex_of(x, h));
    p2.push_back(a);
    for (Vertex x : gp) p2.push_back(p.vertex_of(x, hs));
    p2.push_back(b);
  } else {
    const Path gp = tree_path(trees.s, g, g2);
    const Path hp = tree_path(trees.t, h, h2);
    for (Vertex x : hp) p1.push_back(p.vertex_of(g, x));
    for (std::size_t i = 1; i < gp.size(); ++i) p1.push_back(p.vertex_of(gp[i], h2));
    for (Vertex x : gp) p2.push_back(p.vertex_of(x, h));
    for (std::size_t i = 1; i < hp.size(); ++i) p2.push_back(p.vertex_of(g2, hp[i]));
  }
  return {{a, b}, WitnessMode::k_disjoint, {std::move(p1), std::move(p2)}};
}

template <class MakeWitness>
std::vector<Witness> witnesses_for_all_pairs(int n, MakeWitness make) {
  std::vector<Witness> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) out.push_back(make(a, b));
  }
  return out;
}

/// Smallest index in 0..n-1 outside `avoid` satisfying `ok`.
template <class Pred>
Vertex pick_index(int n, std::initializer_list<Vertex> avoid, Pred ok) {
  for (Vertex x = 0; x < n; ++x) {
    if (std::find(avoid.begin(), avoid.end(), x) == avoid.end() && ok(x)) return x;
  }
  throw precondition_error("no index satisfies the construction's constraints");
}

inline Vertex pick_index(int n, std::initializer_list<Vertex> avoid) {
  return pick_index(n, avoid, [](Vertex) { return true; });
}

/// Zips a factor coordinate sequence with an H-walk into product vertices.
inline Path zip_walk(const ProductGraph& p, const std::vector<Vertex>& gs, const Path& hs) {
  Path out;
  for (std::size_t i = 0; i < hs.size(); ++i) out.push_back(p.vertex_of(gs[i], hs[i]));
  return out;
}

/**
 * A geodesic in K_n x H between (gi,h) and (gj,h2), lifting shortest
 * odd/even walks of H and choosing the K_n coordinates along the way.
 * With `parity_sensitive`, consecutive internal K_n indices are picked with
 * different parity, which makes the path proper under the index-parity
 * coloring; otherwise they are only required to differ.
 */
inline Path kn_times_h_geodesic(const ProductGraph& p, const Graph& h_graph, Vertex gi, Vertex h, Vertex gj,
                                Vertex h2, bool parity_sensitive) {
  const int n = p.left_order;
  auto differs_in_parity = [&](Vertex x, Vertex y) { return !parity_sensitive || (x % 2) != (y % 2); };
  auto walk = [&](int parity) {
    auto w = shortest_parity_walk(h_graph, h, h2, parity);
    if (!w) throw precondition_error("no walk of the required parity");
    return *w;
  };
  auto alternate = [](std::size_t len, Vertex first, Vertex odd_pos, Vertex even_pos, Vertex last) {
    std::vector<Vertex> gs(len);
    gs[0] = first;
    for (std::size_t i = 1; i + 1 < len; ++i) gs[i] = (i % 2 == 1) ? odd_pos : even_pos;
    gs[len - 1] = last;
    return gs;
  };

  if (n == 2) {
    const Vertex other = 1 - gi;
    // g fixed: shortest even walk; g switched (same or different h): shortest odd walk
    const Path w = walk(gi == gj ? 0 : 1);
    if (gi != gj && w.size() == 2) return zip_walk(p, {gi, gj}, w);
    return zip_walk(p, alternate(w.size(), gi, other, gi, gj), w);
  }

  if (h == h2) {
    const Vertex k = pick_index(n, {gi, gj});
    const Vertex hs = h_graph.neighbors(h).front();
    return {p.vertex_of(gi, h), p.vertex_of(k, hs), p.vertex_of(gj, h2)};
  }

  if (gi == gj) {
    if (h_graph.adjacent(h, h2)) {
      for (Vertex hs : h_graph.neighbors(h)) {
        if (h_graph.adjacent(hs, h2)) {
          const Vertex k = pick_index(n, {gi});
          return {p.vertex_of(gi, h), p.vertex_of(k, hs), p.vertex_of(gj, h2)};
        }
      }
      const Vertex k = pick_index(n, {gi});
      const Vertex l = pick_index(n, {gi, k}, [&](Vertex x) { return differs_in_parity(x, k); });
      return {p.vertex_of(gi, h), p.vertex_of(k, h2), p.vertex_of(l, h), p.vertex_of(gj, h2)};
    }
    const auto pd = parity_distances(h_graph, h, h2);
    if (pd.even >= pd.odd) {
      const Path w = walk(1);
      const Vertex k = pick_index(n, {gi});
      const Vertex l = pick_index(n, {gi, k}, [&](Vertex x) { return differs_in_parity(x, k); });
      return zip_walk(p, alternate(w.size(), gi, k, l, gj), w);
    }
    const Path w = walk(0);
    const Vertex q = pick_index(n, {gi}, [&](Vertex x) { return differs_in_parity(x, gi); });
    return zip_walk(p, alternate(w.size(), gi, q, gi, gj), w);
  }

  if (h_graph.adjacent(h, h2)) return {p.vertex_of(gi, h), p.vertex_of(gj, h2)};
  const auto pd = parity_distances(h_graph, h, h2);
  if (pd.even >= pd.odd) {
    const Path w = walk(1);
    const Vertex k = pick_index(n, {gi, gj}, [&](Vertex x) { return differs_in_parity(x, gj); });
    return zip_walk(p, alternate(w.size(), gi, gj, k, gj), w);
  }
  const Path w = walk(0);
  const Vertex q = pick_index(n, {gi, gj}, [&](Vertex x) { return differs_in_parity(x, gj); });
  return zip_walk(p, alternate(w.size(), gi, q, gj, gj), w);
}

inline std::vector<Witness> geodesic_witnesses_by_search(const Graph& g, const VertexColoring& c) {
  std::vector<Witness> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      auto path = find_proper_geodesic(g, c, a, b);
      if (!path) return {};
      out.push_back({{a, b}, WitnessMode::geodesic, {std::move(*path)}});
    }
  }
  return out;
}

inline std::vector<Witness> disjoint_witnesses_by_search(const Graph& g, const VertexColoring& c, int k) {
  std::vector<Witness> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      auto w = find_k_disjoint_proper_paths(g, c, a, b, k);
      if (!w) return {};
      out.push_back(std::move(*w));
    }
  }
  return out;
}

inline void fail(TheoremReport& r, std::string why) {
  r.verified = false;
  if (r.failure.empty()) r.failure = std::move(why);
}

/**
 * Re-verifies a report: the palette matches the predicted value, the
 * coloring satisfies the requirement on every pair, and every witness (one
 * per unordered pair; found by exact search when the proof lists no paths)
 * passes check_witness.
 */
inline TheoremReport finalize(TheoremReport r) {
  r.verified = true;
  if (!r.coloring) {
    fail(r, "no coloring");
    return r;
  }
  const VertexColoring& c = *r.coloring;
  if (c.size() != r.graph.order()) {
    fail(r, "coloring size does not match graph");
    return r;
  }
  if (r.predicted) {
    const int expected_hi = std::max(1, r.predicted->hi);
    if (r.predicted->is_point()) {
      if (c.palette_size() != expected_hi || c.distinct_colors() != expected_hi) {
        fail(r, "coloring does not use exactly the predicted number of colors");
      }
    } else if (c.palette_size() > expected_hi) {
      fail(r, "coloring uses more colors than the upper bound");
    }
  }
  const Graph& g = r.graph;
  if (!r.parameter.is_spvc()) require_k_in_range(g, r.parameter.k);
  if (!is_connected(g)) {
    fail(r, "graph is disconnected");
    return r;
  }

  if (r.witnesses.empty()) {
    r.witnesses = r.parameter.is_spvc() ? geodesic_witnesses_by_search(g, c)
                                        : disjoint_witnesses_by_search(g, c, r.parameter.k);
    if (r.witnesses.empty() && g.order() > 1) {
      fail(r, "exact search found a pair without the required paths");
      return r;
    }
    r.notes.push_back("witnesses from exact search");
  } else if (!satisfies(g, c, r.parameter)) {
    fail(r, "verifier rejected the coloring");
  }

  const auto pairs = static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2;
  if (r.witnesses.size() != pairs) fail(r, "witness count does not cover every pair");
  const auto mode = r.parameter.is_spvc() ? WitnessMode::geodesic : WitnessMode::k_disjoint;
  for (const auto& w : r.witnesses) {
    auto check = check_witness(g, c, w);
    if (!check) {
      fail(r, "witness for (" + std::to_string(w.pair.first) + "," + std::to_string(w.pair.second) +
                  ") rejected: " + std::string(to_string(check.reason)));
      break;
    }
    if (w.mode != mode || (mode == WitnessMode::k_disjoint &&
                           static_cast<int>(w.paths.size()) != r.parameter.k)) {
      fail(r, "witness has the wrong shape for the parameter");
      break;
    }
  }
  return r;
}

inline TheoremReport start_report(std::string id, Parameter param, std::vector<std::string> inputs, Graph graph) {
  TheoremReport r;
  r.theorem_id = std::move(id);
  r.parameter = param;
  r.inputs = std::move(inputs);
  r.graph = std::move(graph);
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Base values
// ---------------------------------------------------------------------------

/// pvc: 0 complete, 1 diam 2, 2 diam >= 3. spvc: 0 complete, 1 diam 2,
/// no prediction otherwise. `param` must be pvc (k=1) or spvc.
inline std::optional<int> predicted_base(const Graph& g, Parameter param) {
  detail::require_nontrivial_connected(g, "G");
  if (!param.is_spvc() && param.k != 1) throw precondition_error("base values cover pvc and spvc only");
  if (is_complete(g)) return 0;
  const int d = detail::diam_value(g);
  if (d == 2) return 1;
  if (param.is_spvc()) return std::nullopt;
  return 2;
}

inline TheoremReport base_report(const Graph& g, Parameter param) {
  auto value = predicted_base(g, param);
  auto r = detail::start_report(param.is_spvc() ? "base.spvc" : "base.pvc", param, {detail::describe('G', g)}, g);
  if (!value) {
    r.notes.push_back("no general spvc value for diameter >= 3");
    return r;
  }
  r.predicted = Interval::point(*value);
  if (*value <= 1) {
    r.coloring = VertexColoring::monochromatic(g.order());
  } else {
    // BFS-tree depth parity: tree paths alternate colors
    auto st = spanning_tree(g, 0);
    std::vector<int> colors(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) colors[v] = st.depth[v] % 2 + 1;
    r.coloring = VertexColoring(std::move(colors));
  }
  return detail::finalize(std::move(r));
}

// ---------------------------------------------------------------------------
// Complete and complete bipartite graphs
// ---------------------------------------------------------------------------

/// pvc_k(K_n) = 1 for 2 <= k <= n-1, witnessed by the monochromatic coloring.
inline TheoremReport complete_pvck(int n, int k) {
  if (k < 2 || k > n - 1) throw precondition_error("complete_pvck needs 2 <= k <= n-1");
  Graph g = complete_graph(n);
  auto r = detail::start_report("lemma.J1.complete", Parameter::pvc(k), {"K_" + std::to_string(n)}, g);
  r.predicted = Interval::point(1);
  r.coloring = VertexColoring::monochromatic(n);
  r.witnesses = detail::witnesses_for_all_pairs(n, [&](Vertex a, Vertex b) {
    Witness w{{a, b}, WitnessMode::k_disjoint, {{a, b}}};
    for (Vertex x = 0; x < n && static_cast<int>(w.paths.size()) < k; ++x) {
      if (x != a && x != b) w.paths.push_back({a, x, b});
    }
    return w;
  });
  return detail::finalize(std::move(r));
}

/// pvc_k(K_{n1,n2}) = 2 for 2 <= k <= n1 <= n2, one color per side.
inline TheoremReport complete_bipartite_pvck(int n1, int n2, int k) {
  if (k < 2 || k > n1 || n1 > n2) throw precondition_error("complete_bipartite_pvck needs 2 <= k <= n1 <= n2");
  Graph g = complete_bipartite_graph(n1, n2);
  auto r = detail::start_report("lemma.J1.bipartite", Parameter::pvc(k),
                                {"K_{" + std::to_string(n1) + "," + std::to_string(n2) + "}"}, g);
  r.predicted = Interval::point(2);
  std::vector<int> colors(static_cast<std::size_t>(n1 + n2), 2);
  std::fill(colors.begin(), colors.begin() + n1, 1);
  r.coloring = VertexColoring(std::move(colors));
  return detail::finalize(std::move(r));
}

// ---------------------------------------------------------------------------
// Join
// ---------------------------------------------------------------------------

/// k = 1: pvc(G v H) = 1 unless the join is complete (then 0).
/// k >= 2: 2 if delta(G) + delta(H) < k-1, else 1; needs 2 <= k <= min(|G|,|H|).
inline TheoremReport join_pvck(const Graph& a, const Graph& b, int k) {
  ProductGraph p = join(a, b);
  auto r = detail::start_report("join.pvck", Parameter::pvc(k), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  if (k == 1) {
    r.predicted = Interval::point(is_complete(p.graph) ? 0 : 1);
    r.coloring = VertexColoring::monochromatic(p.order());
    return detail::finalize(std::move(r));
  }
  if (k < 2 || k > std::min(a.order(), b.order())) {
    throw precondition_error("join_pvck needs 2 <= k <= min(|G|,|H|)");
  }
  require_k_in_range(p.graph, k);
  const int delta_sum = structural_predicates(a).min_degree + structural_predicates(b).min_degree;
  if (delta_sum < k - 1) {
    r.predicted = Interval::point(2);
    std::vector<int> colors(static_cast<std::size_t>(p.order()), 2);
    std::fill(colors.begin(), colors.begin() + a.order(), 1);
    r.coloring = VertexColoring(std::move(colors));
  } else {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
  }
  return detail::finalize(std::move(r));
}

/// spvc(G v H) = 1 unless the join is complete (then 0).
inline TheoremReport join_spvc(const Graph& a, const Graph& b) {
  ProductGraph p = join(a, b);
  auto r = detail::start_report("join.pvck", Parameter::spvc(), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  r.predicted = Interval::point(is_complete(p.graph) ? 0 : 1);
  r.coloring = VertexColoring::monochromatic(p.order());
  return detail::finalize(std::move(r));
}

// ---------------------------------------------------------------------------
// Cartesian product
// ---------------------------------------------------------------------------

inline TheoremReport cartesian_pvc(const Graph& a, const Graph& b) {
  detail::require_nontrivial_connected(a, "G");
  detail::require_nontrivial_connected(b, "H");
  ProductGraph p = cartesian(a, b);
  auto r = detail::start_report("cart.pvc", Parameter::pvc(1), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  if (is_complete(a) && is_complete(b)) {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
  } else {
    r.predicted = Interval::point(2);
    r.coloring = detail::tree_parity_coloring(p, detail::tree_pair(a, b));
  }
  return detail::finalize(std::move(r));
}

/**
 * pvc_2(G □ H): 1 for two complete factors of order >= 3; 2 otherwise.
 * Colorings: monochromatic with explicit 2-path families; one color per K_2
 * side for {K_2, K_n}, n >= 3; spanning-tree parity with tree-path families
 * in every other case.
 */
inline TheoremReport cartesian_pvc2(const Graph& a, const Graph& b) {
  detail::require_nontrivial_connected(a, "G");
  detail::require_nontrivial_connected(b, "H");
  ProductGraph p = cartesian(a, b);
  auto r = detail::start_report("cart.pvc2", Parameter::pvc(2), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  const bool ka = is_complete(a);
  const bool kb = is_complete(b);
  if (ka && kb && a.order() >= 3 && b.order() >= 3) {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
    r.witnesses = detail::witnesses_for_all_pairs(p.order(), [&](Vertex x, Vertex y) {
      auto [g, h] = p.coordinates(x);
      auto [g2, h2] = p.coordinates(y);
      Witness w{{x, y}, WitnessMode::k_disjoint, {}};
      if (g == g2) {
        const Vertex h0 = detail::pick_index(b.order(), {h, h2});
        w.paths = {{x, y}, {x, p.vertex_of(g, h0), y}};
      } else if (h == h2) {
        const Vertex g0 = detail::pick_index(a.order(), {g, g2});
        w.paths = {{x, y}, {x, p.vertex_of(g0, h), y}};
      } else {
        w.paths = {{x, p.vertex_of(g, h2), y}, {x, p.vertex_of(g2, h), y}};
      }
      return w;
    });
  } else if (ka && kb && (a.order() == 2) != (b.order() == 2)) {
    r.predicted = Interval::point(2);
    const bool left_is_k2 = a.order() == 2;
    r.coloring = detail::coordinate_coloring(p, [&](Vertex g, Vertex h) { return (left_is_k2 ? g : h) + 1; });
  } else {
    r.predicted = Interval::point(2);
    const auto trees = detail::tree_pair(a, b);
    r.coloring = detail::tree_parity_coloring(p, trees);
    r.witnesses = detail::witnesses_for_all_pairs(
        p.order(), [&](Vertex x, Vertex y) { return detail::cartesian_tree_witness(p, trees, x, y); });
  }
  return detail::finalize(std::move(r));
}

/**
 * spvc(G □ H): exactly 1 for two complete factors; otherwise in
 * [2, min{s(G)·chi(H), s(H)·chi(G)}] where s(X) = max(1, spvc(X)). The
 * emitted coloring pairs a strong coloring of one factor with an optimal
 * proper coloring of the other, for the cheaper order.
 */
inline TheoremReport cartesian_spvc_bound(const Graph& a, const Graph& b,
                                    std::optional<StrongColoring> strong_a = std::nullopt,
                                    std::optional<StrongColoring> strong_b = std::nullopt) {
  detail::require_nontrivial_connected(a, "G");
  detail::require_nontrivial_connected(b, "H");
  ProductGraph p = cartesian(a, b);
  auto r = detail::start_report("cart.spvc", Parameter::spvc(), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  if (is_complete(a) && is_complete(b)) {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
    return detail::finalize(std::move(r));
  }
  if (!strong_a) strong_a = optimal_strong_coloring(a);
  if (!strong_b) strong_b = optimal_strong_coloring(b);
  const auto chi_a = chromatic_number(a);
  const auto chi_b = chromatic_number(b);
  const int sa = std::max(1, strong_a->value);
  const int sb = std::max(1, strong_b->value);
  if (strong_a->value == 0 || strong_b->value == 0) {
    r.notes.push_back("complete factor: spvc 0 replaced by one color in the product coloring");
  }
  const int bound_ab = sa * chi_b.chromatic_number;
  const int bound_ba = sb * chi_a.chromatic_number;
  r.predicted = Interval{2, std::min(bound_ab, bound_ba)};
  if (bound_ab <= bound_ba) {
    r.coloring = detail::coordinate_coloring(p, [&](Vertex g, Vertex h) {
      return (strong_a->coloring[g] - 1) * chi_b.chromatic_number + chi_b.coloring[h];
    });
  } else {
    r.coloring = detail::coordinate_coloring(p, [&](Vertex g, Vertex h) {
      return (strong_b->coloring[h] - 1) * chi_a.chromatic_number + chi_a.coloring[g];
    });
  }
  return detail::finalize(std::move(r));
}

// ---------------------------------------------------------------------------
// Lexicographic product
// ---------------------------------------------------------------------------

namespace detail {

inline void require_lex_factors(const Graph& a, const Graph& b) {
  require_nontrivial_connected(a, "G");
  if (b.order() < 2) throw precondition_error("H must be nontrivial");
}

/// c(g, h_i) = 1 for odd i, 2 for even i (1-based index of h).
inline VertexColoring index_parity_coloring(const ProductGraph& p) {
  return coordinate_coloring(p, [](Vertex, Vertex h) { return h % 2 == 0 ? 1 : 2; });
}

inline std::optional<int> lex_value(const Graph& a, const Graph& b) {
  if (is_complete(a) && is_complete(b)) return 0;
  return diam_value(a) >= 3 ? 2 : 1;
}

}  // namespace detail

inline TheoremReport lex_pvc(const Graph& a, const Graph& b) {
  detail::require_lex_factors(a, b);
  ProductGraph p = lexicographic(a, b);
  auto r = detail::start_report("lex.pvc", Parameter::pvc(1), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  const int v = *detail::lex_value(a, b);
  r.predicted = Interval::point(v);
  r.coloring = v == 2 ? detail::index_parity_coloring(p) : VertexColoring::monochromatic(p.order());
  return detail::finalize(std::move(r));
}

inline TheoremReport lex_spvc(const Graph& a, const Graph& b) {
  detail::require_lex_factors(a, b);
  ProductGraph p = lexicographic(a, b);
  auto r = detail::start_report("lex.spvc", Parameter::spvc(), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  const int v = *detail::lex_value(a, b);
  r.predicted = Interval::point(v);
  r.coloring = v == 2 ? detail::index_parity_coloring(p) : VertexColoring::monochromatic(p.order());
  return detail::finalize(std::move(r));
}

/// pvc_2(G ∘ H), H connected: 2 if diam(G) >= 3 (Cartesian spanning
/// subgraph coloring), else 1 with explicit length-<=2 path pairs.
inline TheoremReport lex_pvc2(const Graph& a, const Graph& b) {
  detail::require_lex_factors(a, b);
  if (!is_connected(b)) throw precondition_error("H must be connected");
  ProductGraph p = lexicographic(a, b);
  auto r = detail::start_report("lex.pvc2", Parameter::pvc(2), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  if (detail::diam_value(a) >= 3) {
    r.predicted = Interval::point(2);
    const auto trees = detail::tree_pair(a, b);
    r.coloring = detail::tree_parity_coloring(p, trees);
    r.witnesses = detail::witnesses_for_all_pairs(
        p.order(), [&](Vertex x, Vertex y) { return detail::cartesian_tree_witness(p, trees, x, y); });
    return detail::finalize(std::move(r));
  }
  r.predicted = Interval::point(1);
  r.coloring = VertexColoring::monochromatic(p.order());
  auto common = [&](Vertex g, Vertex g2) {
    for (Vertex x : a.neighbors(g)) {
      if (a.adjacent(x, g2)) return x;
    }
    throw precondition_error("diam(G) <= 2 but no common neighbor");
  };
  r.witnesses = detail::witnesses_for_all_pairs(p.order(), [&](Vertex x, Vertex y) {
    auto [g, h] = p.coordinates(x);
    auto [g2, h2] = p.coordinates(y);
    Witness w{{x, y}, WitnessMode::k_disjoint, {}};
    if (g == g2) {
      const Vertex gs = a.neighbors(g).front();
      w.paths = {{x, p.vertex_of(gs, h), y}, {x, p.vertex_of(gs, h2), y}};
    } else if (a.adjacent(g, g2)) {
      // h = h' or not: the edge plus a detour through a neighbor of h
      const Vertex hs = b.neighbors(h).front();
      w.paths = {{x, y}, {x, p.vertex_of(g, hs), y}};
    } else {
      const Vertex gs = common(g, g2);
      if (h == h2) {
        const Vertex hs = detail::pick_index(b.order(), {h});
        w.paths = {{x, p.vertex_of(gs, h), y}, {x, p.vertex_of(gs, hs), y}};
      } else {
        w.paths = {{x, p.vertex_of(gs, h), y}, {x, p.vertex_of(gs, h2), y}};
      }
    }
    return w;
  });
  return detail::finalize(std::move(r));
}

// ---------------------------------------------------------------------------
// Strong product
// ---------------------------------------------------------------------------

inline TheoremReport strong_pvc(const Graph& a, const Graph& b) {
  detail::require_nontrivial_connected(a, "G");
  detail::require_nontrivial_connected(b, "H");
  ProductGraph p = strong(a, b);
  auto r = detail::start_report("strong.pvc", Parameter::pvc(1), {detail::describe('G', a), detail::describe('H', b)},
                                p.graph);
  if (is_complete(a) && is_complete(b)) {
    r.predicted = Interval::point(0);
    r.coloring = VertexColoring::monochromatic(p.order());
  } else if (detail::diam_value(a) >= 3 || detail::diam_value(b) >= 3) {
    r.predicted = Interval::point(2);
    r.coloring = detail::tree_parity_coloring(p, detail::tree_pair(a, b));
  } else {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
  }
  return detail::finalize(std::move(r));
}

/**
 * pvc_2(G ⊠ H). Reads the exception as: both factors contain a distance-2
 * pair with exactly one common neighbor. Value 2 uses the Cartesian
 * spanning-subgraph coloring with tree-path families.
 */
inline TheoremReport strong_pvc2(const Graph& a, const Graph& b) {
  detail::require_nontrivial_connected(a, "G");
  detail::require_nontrivial_connected(b, "H");
  ProductGraph p = strong(a, b);
  auto r = detail::start_report("strong.pvc2", Parameter::pvc(2),
                                {detail::describe('G', a), detail::describe('H', b)}, p.graph);
  const bool small = detail::diam_value(a) <= 2 && detail::diam_value(b) <= 2;
  const bool blocked = structural_predicates(a).has_dist2_pair_with_unique_common_neighbor &&
                       structural_predicates(b).has_dist2_pair_with_unique_common_neighbor;
  if (small && !blocked) {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
  } else {
    r.predicted = Interval::point(2);
    const auto trees = detail::tree_pair(a, b);
    r.coloring = detail::tree_parity_coloring(p, trees);
    r.witnesses = detail::witnesses_for_all_pairs(
        p.order(), [&](Vertex x, Vertex y) { return detail::cartesian_tree_witness(p, trees, x, y); });
  }
  return detail::finalize(std::move(r));
}

/**
 * spvc(G ⊠ H): 0 for complete factors; 1 when the larger diameter is 2;
 * within [2, spvc(H)] when diam(G) <= 2 < 3 <= diam(H) (coloring lifted
 * from H), symmetrically for G; within [2, spvc(G)·spvc(H)] when both
 * diameters are at least 3 (pair coloring).
 */
inline TheoremReport strong_spvc(const Graph& a, const Graph& b,
                                 std::optional<StrongColoring> strong_a = std::nullopt,
                                 std::optional<StrongColoring> strong_b = std::nullopt) {
  detail::require_nontrivial_connected(a, "G");
  detail::require_nontrivial_connected(b, "H");
  ProductGraph p = strong(a, b);
  auto r = detail::start_report("strong.spvc", Parameter::spvc(),
                                {detail::describe('G', a), detail::describe('H', b)}, p.graph);
  const int da = detail::diam_value(a);
  const int db = detail::diam_value(b);
  if (da == 1 && db == 1) {
    r.predicted = Interval::point(0);
    r.coloring = VertexColoring::monochromatic(p.order());
  } else if (da <= 2 && db <= 2) {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
  } else if (da <= 2) {
    if (!strong_b) strong_b = optimal_strong_coloring(b);
    r.predicted = Interval{2, strong_b->value};
    r.coloring = detail::coordinate_coloring(p, [&](Vertex, Vertex h) { return strong_b->coloring[h]; });
  } else if (db <= 2) {
    if (!strong_a) strong_a = optimal_strong_coloring(a);
    r.predicted = Interval{2, strong_a->value};
    r.coloring = detail::coordinate_coloring(p, [&](Vertex g, Vertex) { return strong_a->coloring[g]; });
  } else {
    if (!strong_a) strong_a = optimal_strong_coloring(a);
    if (!strong_b) strong_b = optimal_strong_coloring(b);
    r.predicted = Interval{2, strong_a->value * strong_b->value};
    r.coloring = detail::coordinate_coloring(p, [&](Vertex g, Vertex h) {
      return (strong_a->coloring[g] - 1) * strong_b->value + strong_b->coloring[h];
    });
  }
  return detail::finalize(std::move(r));
}

// ---------------------------------------------------------------------------
// Direct product
// ---------------------------------------------------------------------------

namespace detail {

inline void require_direct_factors(const Graph& a, const Graph& b) {
  require_nontrivial_connected(a, "G");
  require_nontrivial_connected(b, "H");
  if (is_bipartite(a) && is_bipartite(b)) {
    throw precondition_error("direct product of two bipartite factors is disconnected");
  }
}

/// diam(G × H) = 2 iff both diameters are <= 2 and every edge of both
/// factors lies in a triangle (one factor nonbipartite).
inline bool direct_diameter_two(const Graph& a, const Graph& b) {
  return diam_value(a) <= 2 && diam_value(b) <= 2 && structural_predicates(a).every_edge_in_triangle &&
         structural_predicates(b).every_edge_in_triangle;
}

}  // namespace detail

/// pvc(G × H) = spvc(G × H) = 1 under the diameter-2 condition, else
/// pvc = 2 (spvc: no prediction). The value-2 coloring comes from the
/// exhaustive oracle on products of up to 16 vertices, and from BFS-tree
/// depth parity beyond that.
inline TheoremReport direct_pvc_spvc(const Graph& a, const Graph& b, Parameter param = Parameter::pvc(1)) {
  detail::require_direct_factors(a, b);
  if (!param.is_spvc() && param.k != 1) throw precondition_error("direct_pvc_spvc covers pvc and spvc");
  ProductGraph p = direct(a, b);
  auto r = detail::start_report("direct.pvc", param, {detail::describe('G', a), detail::describe('H', b)}, p.graph);
  if (detail::direct_diameter_two(a, b)) {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
    return detail::finalize(std::move(r));
  }
  if (param.is_spvc()) {
    r.notes.push_back("spvc(G x H) has no general value outside the diameter-2 case");
    return r;
  }
  r.predicted = Interval::point(2);
  if (p.order() <= 16) {
    auto found = brute_pvc_k(p.graph, 1);
    if (found.value != 2) {
      r.notes.push_back("oracle returned " + std::to_string(found.value));
      r.coloring = found.optimal_coloring;
    } else {
      r.coloring = found.optimal_coloring;
      r.notes.push_back("coloring found by exhaustive search");
    }
  } else {
    auto st = spanning_tree(p.graph, 0);
    std::vector<int> colors(static_cast<std::size_t>(p.order()));
    for (Vertex v = 0; v < p.order(); ++v) colors[v] = st.depth[v] % 2 + 1;
    r.coloring = VertexColoring(std::move(colors));
    r.notes.push_back("coloring from BFS-tree depth parity");
  }
  return detail::finalize(std::move(r));
}

/**
 * K_n × K_m. n, m >= 3: spvc = pvc_2 = 1 (monochromatic). n = 2, m >= 3:
 * spvc = pvc_2 = 2 with one color per K_2 side. pvc_2 witnesses follow the
 * explicit path families; spvc witnesses are lifted geodesics.
 */
inline TheoremReport direct_complete_cases(int n, int m, Parameter param) {
  if (!(m >= 3 && (n >= 3 || n == 2))) throw precondition_error("direct_complete_cases needs m >= 3 and n >= 2");
  if (!param.is_spvc() && param.k != 2) throw precondition_error("direct_complete_cases covers spvc and pvc_2");
  const Graph kn = complete_graph(n);
  const Graph km = complete_graph(m);
  ProductGraph p = direct(kn, km);
  auto r = detail::start_report("direct.D2", param, {"K_" + std::to_string(n), "K_" + std::to_string(m)}, p.graph);
  require_k_in_range(p.graph, param.is_spvc() ? 1 : param.k);

  if (n >= 3) {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
    if (!param.is_spvc()) {
      r.witnesses = detail::witnesses_for_all_pairs(p.order(), [&](Vertex x, Vertex y) {
        auto [g, h] = p.coordinates(x);
        auto [g2, h2] = p.coordinates(y);
        Witness w{{x, y}, WitnessMode::k_disjoint, {}};
        if (g == g2) {
          const Vertex g1 = detail::pick_index(n, {g});
          const Vertex g3 = detail::pick_index(n, {g, g1});
          const Vertex hs = detail::pick_index(m, {h, h2});
          w.paths = {{x, p.vertex_of(g1, hs), y}, {x, p.vertex_of(g3, hs), y}};
        } else if (h == h2) {
          const Vertex h1 = detail::pick_index(m, {h});
          const Vertex h3 = detail::pick_index(m, {h, h1});
          const Vertex gs = detail::pick_index(n, {g, g2});
          w.paths = {{x, p.vertex_of(gs, h1), y}, {x, p.vertex_of(gs, h3), y}};
        } else {
          const Vertex gs = detail::pick_index(n, {g, g2});
          const Vertex hs = detail::pick_index(m, {h, h2});
          w.paths = {{x, y}, {x, p.vertex_of(gs, hs), y}};
        }
        return w;
      });
    }
    return detail::finalize(std::move(r));
  }

  r.predicted = Interval::point(2);
  r.coloring = detail::coordinate_coloring(p, [](Vertex g, Vertex) { return g + 1; });
  if (param.is_spvc()) {
    r.witnesses = detail::witnesses_for_all_pairs(p.order(), [&](Vertex x, Vertex y) {
      auto [g, h] = p.coordinates(x);
      auto [g2, h2] = p.coordinates(y);
      return Witness{{x, y}, WitnessMode::geodesic, {detail::kn_times_h_geodesic(p, km, g, h, g2, h2, false)}};
    });
  } else {
    r.witnesses = detail::witnesses_for_all_pairs(p.order(), [&](Vertex x, Vertex y) {
      auto [g, h] = p.coordinates(x);
      auto [g2, h2] = p.coordinates(y);
      Witness w{{x, y}, WitnessMode::k_disjoint, {}};
      auto at = [&](Vertex gg, Vertex hh) { return p.vertex_of(gg, hh); };
      if (g == g2) {
        const Vertex gs = 1 - g;
        const Vertex hs = detail::pick_index(m, {h, h2});
        w.paths = {{x, at(gs, hs), y}, {x, at(gs, h2), at(g, hs), at(gs, h), y}};
      } else if (h == h2) {
        const Vertex h1 = detail::pick_index(m, {h});
        const Vertex h3 = detail::pick_index(m, {h, h1});
        w.paths = {{x, at(g2, h1), at(g, h3), y}, {x, at(g2, h3), at(g, h1), y}};
      } else {
        const Vertex hs = detail::pick_index(m, {h, h2});
        w.paths = {{x, y}, {x, at(g2, hs), at(g, h2), at(g2, h), at(g, hs), y}};
      }
      return w;
    });
  }
  return detail::finalize(std::move(r));
}

/**
 * spvc(K_n × H) for H nontrivial connected with diam(H) >= 2.
 *   n = 2 (H nonbipartite): 2, one color per K_2 side.
 *   n >= 3, diam(H) = 2 and every edge of H in a triangle: 1.
 *   n >= 4 otherwise: 2, color by parity of the K_n index.
 *   n = 3 otherwise: 2 for trees (color by parity of depth in H), else
 *   within [2, 3] with c(g_i, h) = i.
 * Geodesic witnesses lift shortest odd/even walks of H.
 */
inline TheoremReport direct_kn_times_h(int n, const Graph& h_graph) {
  if (n < 2) throw precondition_error("direct_kn_times_h needs n >= 2");
  detail::require_nontrivial_connected(h_graph, "H");
  if (detail::diam_value(h_graph) < 2) throw precondition_error("direct_kn_times_h needs diam(H) >= 2");
  if (n == 2 && is_bipartite(h_graph)) throw precondition_error("K_2 x H needs H nonbipartite");
  const Graph kn = complete_graph(n);
  ProductGraph p = direct(kn, h_graph);
  if (!is_connected(p.graph)) throw precondition_error("K_n x H is disconnected");
  auto r = detail::start_report("direct.D3", Parameter::spvc(), {"K_" + std::to_string(n), detail::describe('H', h_graph)},
                                p.graph);
  const auto preds = structural_predicates(h_graph);

  if (n >= 3 && detail::diam_value(h_graph) == 2 && preds.every_edge_in_triangle) {
    r.predicted = Interval::point(1);
    r.coloring = VertexColoring::monochromatic(p.order());
    return detail::finalize(std::move(r));
  }

  bool parity_sensitive = false;
  if (n == 2) {
    r.predicted = Interval::point(2);
    r.coloring = detail::coordinate_coloring(p, [](Vertex g, Vertex) { return g + 1; });
  } else if (n >= 4) {
    r.predicted = Interval::point(2);
    r.coloring = detail::coordinate_coloring(p, [](Vertex g, Vertex) { return g % 2 == 0 ? 1 : 2; });
    parity_sensitive = true;
  } else if (preds.is_tree) {
    r.predicted = Interval::point(2);
    const auto depth = bfs_distances(h_graph, 0);
    r.coloring = detail::coordinate_coloring(p, [&](Vertex, Vertex h) { return depth[h].value() % 2 == 1 ? 1 : 2; });
  } else {
    r.predicted = Interval{2, 3};
    r.coloring = detail::coordinate_coloring(p, [](Vertex g, Vertex) { return g + 1; });
  }
  r.witnesses = detail::witnesses_for_all_pairs(p.order(), [&](Vertex x, Vertex y) {
    auto [g, h] = p.coordinates(x);
    auto [g2, h2] = p.coordinates(y);
    return Witness{{x, y}, WitnessMode::geodesic,
                   {detail::kn_times_h_geodesic(p, h_graph, g, h, g2, h2, parity_sensitive)}};
  });
  return detail::finalize(std::move(r));
}

}  // namespace pvclab

#endif  // PVCLAB_THEOREMS_HPP
