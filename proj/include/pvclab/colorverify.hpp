#ifndef PVCLAB_COLORVERIFY_HPP
#define PVCLAB_COLORVERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvclab/errors.hpp"
#include "pvclab/graph.hpp"
#include "pvclab/graph_core.hpp"

namespace pvclab {

/// Positive colors, one per vertex. The palette size is the largest color.
class VertexColoring {
 public:
  VertexColoring() = default;

  explicit VertexColoring(std::vector<int> colors) : colors_(std::move(colors)) {
    if (colors_.empty()) throw precondition_error("a coloring must color at least one vertex");
    for (int c : colors_) {
      if (c < 1) throw precondition_error("colors must be positive integers");
    }
  }

  static VertexColoring monochromatic(int n) { return VertexColoring(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  int size() const { return static_cast<int>(colors_.size()); }
  const std::vector<int>& colors() const { return colors_; }
  int palette_size() const { return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end()); }

  /// Number of distinct colors actually used.
  int distinct_colors() const { return static_cast<int>(std::set<int>(colors_.begin(), colors_.end()).size()); }

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

 private:
  std::vector<int> colors_;
};

inline void require_coloring(const Graph& g, const VertexColoring& c) {
  if (c.size() != g.order()) {
    throw precondition_error("coloring has " + std::to_string(c.size()) + " entries but graph has " +
                             std::to_string(g.order()) + " vertices");
  }
}

enum class WitnessMode { k_disjoint, geodesic };

/// Paths certifying one connection requirement for the pair (u, v).
struct Witness {
  std::pair<Vertex, Vertex> pair;
  WitnessMode mode = WitnessMode::k_disjoint;
  std::vector<Path> paths;
};

// ---------------------------------------------------------------------------
// Single paths
// ---------------------------------------------------------------------------

inline bool is_simple_path_in(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.is_vertex(path[i]) || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

/// Consecutive internal vertices carry different colors. Endpoints are never
/// constrained, so paths with at most one internal vertex are always proper.
inline bool is_vertex_proper_path(const Graph& g, const VertexColoring& c, std::span<const Vertex> path) {
  require_coloring(g, c);
  if (!is_simple_path_in(g, path)) throw precondition_error("sequence is not a simple path in the graph");
  for (std::size_t i = 1; i + 2 < path.size(); ++i) {
    if (c[path[i]] == c[path[i + 1]]) return false;
  }
  return true;
}

namespace detail {

/**
 * Reachability over internal vertices: z is reached when some proper walk
 * u -> ... -> z exists with z as its last internal vertex. The first step
 * out of u is free; w -> z between internal vertices needs c(w) != c(z).
 * Vertices in `blocked` (and u, v) are never internal. A shortest proper
 * walk is a path, since cutting out a cycle keeps every constraint (they
 * only involve consecutive internal pairs), so the BFS parent chain is a
 * proper simple path.
 */
inline std::optional<Path> proper_path_bfs(const Graph& g, const VertexColoring& c, Vertex u, Vertex v,
                                           const std::vector<char>& blocked, bool allow_direct_edge) {
  if (allow_direct_edge && g.adjacent(u, v)) return Path{u, v};
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> parent(n, -2);
  std::vector<Vertex> queue;
  for (Vertex z : g.neighbors(u)) {
    if (z != v && !blocked[z]) {
      parent[z] = u;
      queue.push_back(z);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex w = queue[head];
    if (g.adjacent(w, v)) {
      Path path{v};
      for (Vertex x = w; x != u; x = parent[x]) path.push_back(x);
      path.push_back(u);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex z : g.neighbors(w)) {
      if (z == u || z == v || blocked[z] || parent[z] != -2) continue;
      if (c[z] == c[w]) continue;
      parent[z] = w;
      queue.push_back(z);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Some vertex-proper u-v path, shortest first; nullopt if none exists.
inline std::optional<Path> find_proper_path(const Graph& g, const VertexColoring& c, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  require_coloring(g, c);
  if (u == v) throw precondition_error("proper paths need distinct endpoints");
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  return detail::proper_path_bfs(g, c, u, v, blocked, true);
}

inline bool exists_proper_path(const Graph& g, const VertexColoring& c, Vertex u, Vertex v) {
  return find_proper_path(g, c, u, v).has_value();
}

/**
 * All targets t != u reachable from u by a vertex-proper path, in one pass.
 * t qualifies iff it is adjacent to u or to some vertex reached as an
 * internal vertex (a walk through t itself shortens at t).
 */
inline std::vector<char> proper_path_targets(const Graph& g, const VertexColoring& c, Vertex u) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> reached(n, 0);
  std::vector<char> target(n, 0);
  std::vector<Vertex> queue;
  for (Vertex z : g.neighbors(u)) {
    reached[z] = 1;
    target[z] = 1;
    queue.push_back(z);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex w = queue[head];
    for (Vertex z : g.neighbors(w)) {
      if (z == u) continue;
      target[z] = 1;
      if (!reached[z] && c[z] != c[w]) {
        reached[z] = 1;
        queue.push_back(z);
      }
    }
  }
  target[u] = 0;
  return target;
}

// ---------------------------------------------------------------------------
// Geodesics
// ---------------------------------------------------------------------------

namespace detail {

/**
 * DP over the BFS shortest-path DAG from u. For internal w:
 *   feasible(w) = OR over DAG predecessors p of [p = u or (feasible(p) and c(p) != c(w))]
 * and a target t admits a proper geodesic iff some DAG predecessor p of t
 * has p = u or feasible(p). `via[w]` keeps the first predecessor that made w
 * feasible, so geodesics can be read back.
 */
struct GeodesicDp {
  std::vector<Distance> dist;
  std::vector<char> feasible;
  std::vector<Vertex> via;
};

inline GeodesicDp geodesic_dp(const Graph& g, const VertexColoring& c, Vertex u) {
  const auto n = static_cast<std::size_t>(g.order());
  GeodesicDp dp{bfs_distances(g, u), std::vector<char>(n, 0), std::vector<Vertex>(n, -1)};
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dp.dist[v].is_finite()) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dp.dist[a] < dp.dist[b]; });
  for (Vertex w : order) {
    if (w == u) continue;
    const auto dw = dp.dist[w].value();
    for (Vertex p : g.neighbors(w)) {
      if (dp.dist[p] != Distance{dw - 1}) continue;
      if (p == u || (dp.feasible[p] && c[p] != c[w])) {
        dp.feasible[w] = 1;
        dp.via[w] = p;
        break;
      }
    }
  }
  return dp;
}

}  // namespace detail

/// Targets t != u joined to u by a vertex-proper geodesic.
inline std::vector<char> proper_geodesic_targets(const Graph& g, const VertexColoring& c, Vertex u) {
  auto dp = detail::geodesic_dp(g, c, u);
  std::vector<char> target(static_cast<std::size_t>(g.order()), 0);
  for (Vertex t = 0; t < g.order(); ++t) {
    if (t == u || dp.dist[t].is_infinite()) continue;
    const auto dt = dp.dist[t].value();
    for (Vertex p : g.neighbors(t)) {
      if (dp.dist[p] == Distance{dt - 1} && (p == u || dp.feasible[p])) {
        target[t] = 1;
        break;
      }
    }
  }
  return target;
}

inline std::optional<Path> find_proper_geodesic(const Graph& g, const VertexColoring& c, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  require_coloring(g, c);
  if (u == v) throw precondition_error("geodesics need distinct endpoints");
  auto dp = detail::geodesic_dp(g, c, u);
  if (dp.dist[v].is_infinite()) throw precondition_error("vertices are in different components");
  const auto dv = dp.dist[v].value();
  for (Vertex p : g.neighbors(v)) {
    if (dp.dist[p] != Distance{dv - 1} || !(p == u || dp.feasible[p])) continue;
    Path path{v};
    for (Vertex x = p; x != u; x = dp.via[x]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
  }
  return std::nullopt;
}

inline bool exists_proper_geodesic(const Graph& g, const VertexColoring& c, Vertex u, Vertex v) {
  return find_proper_geodesic(g, c, u, v).has_value();
}

// ---------------------------------------------------------------------------
// k disjoint proper paths
// ---------------------------------------------------------------------------

/// Node budget for one exact disjoint-path search. PVCLAB_BUDGET overrides
/// the default.
inline std::uint64_t default_search_budget() {
  if (const char* env = std::getenv("PVCLAB_BUDGET")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && value > 0) return value;
  }
  return 20'000'000;
}

namespace detail {

/**
 * Exact search for k internally disjoint vertex-proper u-v paths.
 *
 * Paths are chosen in increasing (length, vertex sequence) order, which
 * removes permutations of the same family. The first k-1 paths are
 * enumerated by depth-limited DFS with iterative deepening on the length;
 * the last one is found by the proper-path BFS on what is left. The direct
 * edge uv counts as one path and can be used once.
 */
class DisjointProperPathSearch {
 public:
  DisjointProperPathSearch(const Graph& g, const VertexColoring& c, Vertex u, Vertex v, std::uint64_t budget)
      : g_(g), c_(c), u_(u), v_(v), budget_(budget), to_v_(bfs_distances(g, v)) {}

  std::optional<std::vector<Path>> run(int k) {
    std::vector<char> blocked(static_cast<std::size_t>(g_.order()), 0);
    chosen_.clear();
    if (solve(k, blocked, false)) return chosen_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool solve(int remaining, std::vector<char>& blocked, bool edge_used) {
    if (remaining == 1) {
      auto last = proper_path_bfs(g_, c_, u_, v_, blocked, !edge_used);
      if (!last) return false;
      chosen_.push_back(*last);
      return true;
    }
    if (!proper_path_bfs(g_, c_, u_, v_, blocked, !edge_used)) return false;
    const std::size_t first_length = chosen_.empty() ? 1 : chosen_.back().size() - 1;
    for (std::size_t length = first_length; length + 1 <= static_cast<std::size_t>(g_.order()); ++length) {
      Path prefix{u_};
      if (extend(prefix, length, remaining, blocked, edge_used)) return true;
    }
    return false;
  }

  bool extend(Path& prefix, std::size_t length, int remaining, std::vector<char>& blocked, bool edge_used) {
    if (++nodes_ > budget_) throw budget_exceeded("disjoint proper path search exceeded its node budget");
    const Vertex w = prefix.back();
    const std::size_t steps_left = length - (prefix.size() - 1);
    if (steps_left == 1) {
      if (!g_.adjacent(w, v_)) return false;
      if (w == u_ && edge_used) return false;
      prefix.push_back(v_);
      bool ok = false;
      if (after_previous(prefix)) {
        for (std::size_t i = 1; i + 1 < prefix.size(); ++i) blocked[prefix[i]] = 1;
        chosen_.push_back(prefix);
        ok = solve(remaining - 1, blocked, edge_used || length == 1);
        if (!ok) {
          chosen_.pop_back();
          for (std::size_t i = 1; i + 1 < prefix.size(); ++i) blocked[prefix[i]] = 0;
        }
      }
      prefix.pop_back();
      return ok;
    }
    for (Vertex z : g_.neighbors(w)) {
      if (z == u_ || z == v_ || blocked[z]) continue;
      if (std::find(prefix.begin(), prefix.end(), z) != prefix.end()) continue;
      if (w != u_ && c_[w] == c_[z]) continue;
      if (to_v_[z].is_infinite() || to_v_[z].value() > steps_left - 1) continue;
      prefix.push_back(z);
      if (extend(prefix, length, remaining, blocked, edge_used)) return true;
      prefix.pop_back();
    }
    return false;
  }

  bool after_previous(const Path& p) const {
    if (chosen_.empty()) return true;
    const Path& prev = chosen_.back();
    if (p.size() != prev.size()) return p.size() > prev.size();
    return p > prev;
  }

  const Graph& g_;
  const VertexColoring& c_;
  Vertex u_;
  Vertex v_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Distance> to_v_;
  std::vector<Path> chosen_;
};

}  // namespace detail

/// k pairwise internally disjoint vertex-proper u-v paths, or nullopt.
/// Throws budget_exceeded instead of guessing when the search is cut short.
inline std::optional<Witness> find_k_disjoint_proper_paths(const Graph& g, const VertexColoring& c, Vertex u,
                                                           Vertex v, int k,
                                                           std::uint64_t budget = default_search_budget()) {
  require_vertex(g, u);
  require_vertex(g, v);
  require_coloring(g, c);
  if (u == v) throw precondition_error("disjoint paths need distinct endpoints");
  if (k < 1) throw precondition_error("k must be positive");
  if (k == 1) {
    auto p = find_proper_path(g, c, u, v);
    if (!p) return std::nullopt;
    return Witness{{u, v}, WitnessMode::k_disjoint, {*p}};
  }
  detail::DisjointProperPathSearch search(g, c, u, v, budget);
  auto paths = search.run(k);
  if (!paths) return std::nullopt;
  return Witness{{u, v}, WitnessMode::k_disjoint, std::move(*paths)};
}

// ---------------------------------------------------------------------------
// Whole-graph verdicts
// ---------------------------------------------------------------------------

/// Unordered pairs sorted by decreasing distance (ties by index), which puts
/// the pairs most likely to fail first.
inline std::vector<std::pair<Vertex, Vertex>> pairs_hardest_first(const Graph& g) {
  const DistanceMatrix d(g);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) pairs.emplace_back(u, v);
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const auto& a, const auto& b) { return d(a.first, a.second) > d(b.first, b.second); });
  return pairs;
}

/// First pair (hardest first) lacking k disjoint proper paths; no kappa
/// check. Used by the oracle, which validates k once up front.
inline std::optional<std::pair<Vertex, Vertex>> first_pair_without_k_paths(
    const Graph& g, const VertexColoring& c, int k, std::uint64_t budget = default_search_budget()) {
  require_coloring(g, c);
  if (k == 1) {
    for (Vertex u = 0; u < g.order(); ++u) {
      auto ok = proper_path_targets(g, c, u);
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!ok[v]) return std::pair{u, v};
      }
    }
    return std::nullopt;
  }
  for (auto [u, v] : pairs_hardest_first(g)) {
    if (!find_k_disjoint_proper_paths(g, c, u, v, k, budget)) return std::pair{u, v};
  }
  return std::nullopt;
}

inline void require_k_in_range(const Graph& g, int k) {
  const int kappa = vertex_connectivity(g);
  if (k < 1 || k > kappa) {
    throw precondition_error("k = " + std::to_string(k) + " is outside 1..kappa(G) = 1.." + std::to_string(kappa));
  }
}

inline bool is_proper_vertex_k_connected(const Graph& g, const VertexColoring& c, int k,
                                         std::uint64_t budget = default_search_budget()) {
  require_coloring(g, c);
  require_k_in_range(g, k);
  return !first_pair_without_k_paths(g, c, k, budget).has_value();
}

/// First pair without a proper geodesic.
inline std::optional<std::pair<Vertex, Vertex>> first_pair_without_geodesic(const Graph& g,
                                                                           const VertexColoring& c) {
  require_coloring(g, c);
  if (!is_connected(g)) throw precondition_error("strong proper vertex-connection needs a connected graph");
  for (Vertex u = 0; u < g.order(); ++u) {
    auto ok = proper_geodesic_targets(g, c, u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!ok[v]) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

inline bool is_strong_proper_vertex_connected(const Graph& g, const VertexColoring& c) {
  return !first_pair_without_geodesic(g, c).has_value();
}

// ---------------------------------------------------------------------------
// Connection requirements
// ---------------------------------------------------------------------------

/// Which requirement a coloring must meet: k disjoint vertex-proper paths
/// per pair (pvc_k), or one vertex-proper geodesic per pair (spvc).
struct Parameter {
  enum class Kind { pvc_k, spvc };
  Kind kind = Kind::pvc_k;
  int k = 1;

  static Parameter pvc(int k = 1) { return {Kind::pvc_k, k}; }
  static Parameter spvc() { return {Kind::spvc, 0}; }

  bool is_spvc() const { return kind == Kind::spvc; }

  std::string name() const {
    if (kind == Kind::spvc) return "spvc";
    return k == 1 ? "pvc" : "pvc_" + std::to_string(k);
  }

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// First pair violating the requirement, or nullopt when c satisfies it.
/// Checks k against kappa(G) for pvc_k.
inline std::optional<std::pair<Vertex, Vertex>> first_failing_pair(const Graph& g, const VertexColoring& c,
                                                                  Parameter p,
                                                                  std::uint64_t budget = default_search_budget()) {
  if (p.is_spvc()) return first_pair_without_geodesic(g, c);
  require_coloring(g, c);
  require_k_in_range(g, p.k);
  return first_pair_without_k_paths(g, c, p.k, budget);
}

inline bool satisfies(const Graph& g, const VertexColoring& c, Parameter p,
                      std::uint64_t budget = default_search_budget()) {
  return !first_failing_pair(g, c, p, budget).has_value();
}

// ---------------------------------------------------------------------------
// Witness checking
// ---------------------------------------------------------------------------

enum class WitnessDefect {
  none,
  coloring_mismatch,
  bad_endpoints,
  no_paths,
  not_a_path,
  not_proper,
  not_disjoint,
  duplicate_path,
  not_geodesic,
  too_many_paths,
};

inline std::string_view to_string(WitnessDefect d) {
  switch (d) {
    case WitnessDefect::none: return "none";
    case WitnessDefect::coloring_mismatch: return "coloring_mismatch";
    case WitnessDefect::bad_endpoints: return "bad_endpoints";
    case WitnessDefect::no_paths: return "no_paths";
    case WitnessDefect::not_a_path: return "not_a_path";
    case WitnessDefect::not_proper: return "not_proper";
    case WitnessDefect::not_disjoint: return "not_disjoint";
    case WitnessDefect::duplicate_path: return "duplicate_path";
    case WitnessDefect::not_geodesic: return "not_geodesic";
    case WitnessDefect::too_many_paths: return "too_many_paths";
  }
  return "?";
}

struct WitnessCheck {
  bool ok = true;
  WitnessDefect reason = WitnessDefect::none;
  explicit operator bool() const { return ok; }
};

inline WitnessCheck check_witness(const Graph& g, const VertexColoring& c, const Witness& w) {
  auto fail = [](WitnessDefect d) { return WitnessCheck{false, d}; };
  if (c.size() != g.order()) return fail(WitnessDefect::coloring_mismatch);
  auto [u, v] = w.pair;
  if (!g.is_vertex(u) || !g.is_vertex(v) || u == v) return fail(WitnessDefect::bad_endpoints);
  if (w.paths.empty()) return fail(WitnessDefect::no_paths);
  if (w.mode == WitnessMode::geodesic && w.paths.size() != 1) return fail(WitnessDefect::too_many_paths);

  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  int direct_edges = 0;
  for (const auto& p : w.paths) {
    if (p.size() < 2 || p.front() != u || p.back() != v) return fail(WitnessDefect::bad_endpoints);
    if (!is_simple_path_in(g, p)) return fail(WitnessDefect::not_a_path);
    if (!is_vertex_proper_path(g, c, p)) return fail(WitnessDefect::not_proper);
    if (p.size() == 2 && ++direct_edges > 1) return fail(WitnessDefect::duplicate_path);
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (used[p[i]]) return fail(WitnessDefect::not_disjoint);
      used[p[i]] = 1;
    }
  }
  if (w.mode == WitnessMode::geodesic) {
    const auto d = distance(g, u, v);
    if (!(d == static_cast<std::uint32_t>(w.paths.front().size() - 1))) return fail(WitnessDefect::not_geodesic);
  }
  return {};
}

}  // namespace pvclab

#endif  // PVCLAB_COLORVERIFY_HPP
