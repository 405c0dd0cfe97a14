#ifndef PVCLAB_GRAPH_CORE_HPP
#define PVCLAB_GRAPH_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <vector>

#include "pvclab/errors.hpp"
#include "pvclab/graph.hpp"

namespace pvclab {

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

/// BFS distances from `source` to every vertex.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> queue{source};
  queue.reserve(static_cast<std::size_t>(g.order()));
  dist[source] = Distance{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex w = queue[head];
    std::uint32_t next = dist[w].value() + 1;
    for (Vertex z : g.neighbors(w)) {
      if (dist[z].is_infinite()) {
        dist[z] = Distance{next};
        queue.push_back(z);
      }
    }
  }
  return dist;
}

inline Distance distance(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, v);
  return bfs_distances(g, u)[v];
}

/// Row-major n x n table of pairwise distances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.order()) {
    data_.reserve(static_cast<std::size_t>(n_) * n_);
    for (Vertex u = 0; u < n_; ++u) {
      auto row = bfs_distances(g, u);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  Distance operator()(Vertex u, Vertex v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  int order() const { return n_; }

 private:
  int n_;
  std::vector<Distance> data_;
};

inline Distance diameter(const Graph& g) {
  Distance best{0};
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const auto& d : bfs_distances(g, u)) best = std::max(best, d);
  }
  return best;
}

inline bool is_connected(const Graph& g) {
  const auto d = bfs_distances(g, 0);
  return std::all_of(d.begin(), d.end(), [](const Distance& x) { return x.is_finite(); });
}

// ---------------------------------------------------------------------------
// Parity distances (BFS over (vertex, parity) states)
// ---------------------------------------------------------------------------

namespace detail {

struct ParityBfs {
  // state index = 2*v + parity
  std::vector<Distance> dist;
  std::vector<int> parent;
};

inline ParityBfs parity_bfs(const Graph& g, Vertex source) {
  require_vertex(g, source);
  const auto states = static_cast<std::size_t>(2 * g.order());
  ParityBfs out{std::vector<Distance>(states), std::vector<int>(states, -1)};
  std::vector<int> queue{2 * source};
  queue.reserve(states);
  out.dist[2 * source] = Distance{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int s = queue[head];
    Vertex w = s / 2;
    int flipped = 1 - s % 2;
    for (Vertex z : g.neighbors(w)) {
      int t = 2 * z + flipped;
      if (out.dist[t].is_infinite()) {
        out.dist[t] = out.dist[s] + Distance{1};
        out.parent[t] = s;
        queue.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace detail

/// Shortest even and odd walk lengths from u to v. The empty walk makes
/// even(u,u) = 0.
inline ParityDistance parity_distances(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, v);
  auto bfs = detail::parity_bfs(g, u);
  return {bfs.dist[2 * v], bfs.dist[2 * v + 1]};
}

/// All parity distances from one source.
inline std::vector<ParityDistance> parity_distances_from(const Graph& g, Vertex u) {
  auto bfs = detail::parity_bfs(g, u);
  std::vector<ParityDistance> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out[v] = {bfs.dist[2 * v], bfs.dist[2 * v + 1]};
  return out;
}

/// A shortest walk of the given parity from u to v (vertex sequence,
/// including both ends), or nullopt if none exists.
inline std::optional<Path> shortest_parity_walk(const Graph& g, Vertex u, Vertex v, int parity) {
  require_vertex(g, v);
  auto bfs = detail::parity_bfs(g, u);
  int s = 2 * v + (parity % 2);
  if (bfs.dist[s].is_infinite()) return std::nullopt;
  Path walk;
  for (; s != -1; s = bfs.parent[s]) walk.push_back(s / 2);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

// ---------------------------------------------------------------------------
// Vertex connectivity
// ---------------------------------------------------------------------------

inline bool is_complete(const Graph& g) {
  return g.size() == static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2;
}

namespace detail {

inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(removed);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex w = stack.back();
    stack.pop_back();
    for (Vertex z : g.neighbors(w)) {
      if (!seen[z]) {
        seen[z] = 1;
        ++reached;
        stack.push_back(z);
      }
    }
  }
  return reached == alive;
}

/// Smallest separating vertex set found by enumerating all subsets in
/// increasing size. Exact; exponential in n.
inline int connectivity_by_cut_enumeration(const Graph& g) {
  const int n = g.order();
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int size = 1; size <= n - 2; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int v : pick) removed[v] = 1;
      if (!connected_without(g, removed)) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n - 1;
}

}  // namespace detail

/**
 * Maximum number of internally vertex-disjoint s-t paths for nonadjacent
 * s, t (Menger), via unit-capacity augmenting paths on the split-vertex
 * network: v_in -> v_out with capacity 1 for internal vertices, and
 * u_out -> v_in for every edge.
 */
inline int max_vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  require_vertex(g, s);
  require_vertex(g, t);
  if (s == t) throw precondition_error("max_vertex_disjoint_paths requires s != t");
  const int n = g.order();
  const int nodes = 2 * n;
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };

  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  auto add = [&](int a, int b, int cap) {
    adj[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    adj[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = n;
  for (Vertex v = 0; v < n; ++v) add(in(v), out(v), (v == s || v == t) ? big : 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      // direct s-t edge carries at most one path
      add(out(u), in(v), (u == s && v == t) ? 1 : big);
    }
  }

  int flow = 0;
  const int source = out(s);
  const int sink = in(t);
  while (true) {
    std::vector<int> via(static_cast<std::size_t>(nodes), -1);
    std::deque<int> queue{source};
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      int x = queue.front();
      queue.pop_front();
      for (int id : adj[x]) {
        const Arc& a = arcs[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          via[a.to] = id;
          queue.push_back(a.to);
        }
      }
    }
    if (!seen[sink]) break;
    for (int x = sink; x != source;) {
      int id = via[x];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      x = arcs[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

namespace detail {

inline int connectivity_by_flow(const Graph& g) {
  const int n = g.order();
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (!g.adjacent(s, t)) best = std::min(best, max_vertex_disjoint_paths(g, s, t));
    }
  }
  return best;
}

}  // namespace detail

/// kappa(G): n-1 for complete graphs, 0 for disconnected ones. Exhaustive
/// cut search for n <= 12, max-flow over nonadjacent pairs beyond that.
inline int vertex_connectivity(const Graph& g) {
  return g.order() <= 12 ? detail::connectivity_by_cut_enumeration(g) : detail::connectivity_by_flow(g);
}

// ---------------------------------------------------------------------------
// Chromatic number
// ---------------------------------------------------------------------------

struct ChromaticResult {
  int chromatic_number = 0;
  std::vector<int> coloring;  // colors 1..chromatic_number, one per vertex
};

namespace detail {

class ExactColorer {
 public:
  explicit ExactColorer(const Graph& g) : g_(g), n_(g.order()) {}

  int max_clique() {
    std::vector<Vertex> all(static_cast<std::size_t>(n_));
    std::iota(all.begin(), all.end(), 0);
    best_clique_ = 0;
    extend_clique(0, all);
    return best_clique_;
  }

  std::vector<int> dsatur_greedy() const {
    std::vector<int> color(static_cast<std::size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
      Vertex pick = next_vertex(color);
      color[pick] = smallest_free(color, pick);
    }
    return color;
  }

  /// Proper coloring with at most k colors, or empty.
  std::vector<int> color_with(int k) {
    std::vector<int> color(static_cast<std::size_t>(n_), 0);
    if (assign(color, k, 0, 0)) return color;
    return {};
  }

 private:
  void extend_clique(int size, const std::vector<Vertex>& candidates) {
    if (candidates.empty()) {
      best_clique_ = std::max(best_clique_, size);
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (size + static_cast<int>(candidates.size() - i) <= best_clique_) return;
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (g_.adjacent(candidates[i], candidates[j])) next.push_back(candidates[j]);
      }
      extend_clique(size + 1, next);
    }
  }

  // DSATUR choice: most distinct neighbor colors, ties by degree then index.
  Vertex next_vertex(const std::vector<int>& color) const {
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] != 0) continue;
      std::vector<char> used(static_cast<std::size_t>(n_) + 2, 0);
      int sat = 0;
      for (Vertex z : g_.neighbors(v)) {
        if (color[z] != 0 && !used[color[z]]) {
          used[color[z]] = 1;
          ++sat;
        }
      }
      if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = g_.degree(v);
      }
    }
    return pick;
  }

  int smallest_free(const std::vector<int>& color, Vertex v) const {
    std::vector<char> used(static_cast<std::size_t>(n_) + 2, 0);
    for (Vertex z : g_.neighbors(v)) used[color[z]] = 1;
    int c = 1;
    while (used[c]) ++c;
    return c;
  }

  bool assign(std::vector<int>& color, int k, int colored, int used_colors) {
    if (colored == n_) return true;
    Vertex v = next_vertex(color);
    std::vector<char> blocked(static_cast<std::size_t>(k) + 1, 0);
    for (Vertex z : g_.neighbors(v)) {
      if (color[z] != 0) blocked[color[z]] = 1;
    }
    // A fresh color beyond used_colors+1 would be a relabeling of used_colors+1.
    const int limit = std::min(k, used_colors + 1);
    for (int c = 1; c <= limit; ++c) {
      if (blocked[c]) continue;
      color[v] = c;
      if (assign(color, k, colored + 1, std::max(used_colors, c))) return true;
    }
    color[v] = 0;
    return false;
  }

  const Graph& g_;
  int n_;
  int best_clique_ = 0;
};

}  // namespace detail

/// Exact chi(G) by clique lower bound, DSATUR upper bound and DSATUR
/// branch-and-bound in between.
inline ChromaticResult chromatic_number(const Graph& g, int max_order = 32) {
  if (g.order() > max_order) {
    throw cap_exceeded("chromatic_number: order " + std::to_string(g.order()) + " exceeds cap " +
                       std::to_string(max_order));
  }
  detail::ExactColorer solver(g);
  auto best = solver.dsatur_greedy();
  int upper = *std::max_element(best.begin(), best.end());
  const int lower = solver.max_clique();
  while (upper > lower) {
    auto attempt = solver.color_with(upper - 1);
    if (attempt.empty()) break;
    best = std::move(attempt);
    upper = *std::max_element(best.begin(), best.end());
  }
  return {upper, std::move(best)};
}

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

struct StructuralPredicates {
  bool is_complete = false;
  bool is_connected = false;
  bool is_bipartite = false;
  bool is_tree = false;
  int min_degree = 0;
  bool every_edge_in_triangle = false;
  bool has_dist2_pair_with_unique_common_neighbor = false;
};

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex w = stack.back();
      stack.pop_back();
      for (Vertex z : g.neighbors(w)) {
        if (side[z] == -1) {
          side[z] = 1 - side[w];
          stack.push_back(z);
        } else if (side[z] == side[w]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline int common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  int count = 0;
  for (Vertex z : g.neighbors(u)) count += g.adjacent(z, v) ? 1 : 0;
  return count;
}

inline StructuralPredicates structural_predicates(const Graph& g) {
  StructuralPredicates p;
  const int n = g.order();
  p.is_complete = is_complete(g);
  p.is_connected = is_connected(g);
  p.is_bipartite = is_bipartite(g);
  p.is_tree = p.is_connected && g.size() == static_cast<std::size_t>(n - 1);
  p.min_degree = g.degree(0);
  for (Vertex v = 1; v < n; ++v) p.min_degree = std::min(p.min_degree, g.degree(v));

  p.every_edge_in_triangle = true;
  for (auto [u, v] : g.edges()) {
    if (common_neighbor_count(g, u, v) == 0) {
      p.every_edge_in_triangle = false;
      break;
    }
  }
  for (Vertex u = 0; u < n && !p.has_dist2_pair_with_unique_common_neighbor; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      // distance exactly 2 <=> nonadjacent with a common neighbor
      if (!g.adjacent(u, v) && common_neighbor_count(g, u, v) == 1) {
        p.has_dist2_pair_with_unique_common_neighbor = true;
        break;
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Spanning trees
// ---------------------------------------------------------------------------

struct SpanningTree {
  Graph tree;
  Vertex root = 0;
  std::vector<int> depth;
  std::vector<Vertex> parent;  // -1 at the root
};

/// BFS spanning tree; depth(v) = d_G(root, v).
inline SpanningTree spanning_tree(const Graph& g, Vertex root) {
  require_vertex(g, root);
  if (!is_connected(g)) throw precondition_error("spanning_tree requires a connected graph");
  const auto n = static_cast<std::size_t>(g.order());
  SpanningTree st{Graph(g.order()), root, std::vector<int>(n, -1), std::vector<Vertex>(n, -1)};
  std::vector<Edge> edges;
  std::vector<Vertex> queue{root};
  st.depth[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex w = queue[head];
    for (Vertex z : g.neighbors(w)) {
      if (st.depth[z] == -1) {
        st.depth[z] = st.depth[w] + 1;
        st.parent[z] = w;
        edges.emplace_back(w, z);
        queue.push_back(z);
      }
    }
  }
  st.tree = Graph(g.order(), edges, g.labels());
  return st;
}

/// The unique a-b path in a rooted spanning tree.
inline Path tree_path(const SpanningTree& st, Vertex a, Vertex b) {
  Path up;
  Path down;
  while (a != b) {
    if (st.depth[a] >= st.depth[b]) {
      up.push_back(a);
      a = st.parent[a];
    } else {
      down.push_back(b);
      b = st.parent[b];
    }
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace pvclab

#endif  // PVCLAB_GRAPH_CORE_HPP
