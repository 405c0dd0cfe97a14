#ifndef PVCLAB_ORACLE_HPP
#define PVCLAB_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pvclab/colorverify.hpp"
#include "pvclab/errors.hpp"
#include "pvclab/graph.hpp"
#include "pvclab/graph_core.hpp"

namespace pvclab {

// ---------------------------------------------------------------------------
// Graph families
// ---------------------------------------------------------------------------

enum class Family { path, cycle, complete, complete_bipartite, star, empty, random_tree, petersen };

inline std::optional<Family> parse_family(std::string_view name) {
  static constexpr std::pair<std::string_view, Family> names[] = {
      {"path", Family::path},       {"cycle", Family::cycle},
      {"complete", Family::complete}, {"complete_bipartite", Family::complete_bipartite},
      {"star", Family::star},       {"empty", Family::empty},
      {"random_tree", Family::random_tree}, {"petersen", Family::petersen},
  };
  for (auto [n, f] : names) {
    if (n == name) return f;
  }
  return std::nullopt;
}

inline Graph path_graph(int n) {
  if (n < 1) throw precondition_error("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw precondition_error("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw precondition_error("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

/// Sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw precondition_error("complete bipartite graph needs both sides nonempty");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, e);
}

/// K_{1,leaves}, center 0.
inline Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

inline Graph empty_graph(int n) { return Graph(n); }

/// Uniform random recursive tree: vertex i attaches to a uniform earlier vertex.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw precondition_error("tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(i)), i);
  return Graph(n, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

/// Named family member. params: path/cycle/complete/star/empty/random_tree
/// take {n} (random_tree also uses seed); complete_bipartite takes {a, b};
/// petersen takes none.
inline Graph generate(Family family, const std::vector<int>& params, std::uint64_t seed = 0) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw precondition_error("family expects " + std::to_string(count) + " size parameter(s)");
    }
  };
  switch (family) {
    case Family::path: need(1); return path_graph(params[0]);
    case Family::cycle: need(1); return cycle_graph(params[0]);
    case Family::complete: need(1); return complete_graph(params[0]);
    case Family::complete_bipartite: need(2); return complete_bipartite_graph(params[0], params[1]);
    case Family::star: need(1); return star_graph(params[0]);
    case Family::empty: need(1); return empty_graph(params[0]);
    case Family::random_tree: need(1); return random_tree(params[0], seed);
    case Family::petersen: need(0); return petersen_graph();
  }
  throw precondition_error("unknown family");
}

// ---------------------------------------------------------------------------
// Small-graph enumeration
// ---------------------------------------------------------------------------

namespace detail {

/// Upper-triangle adjacency bits, pair (i,j) with i<j at bit j*(j-1)/2 + i.
inline std::uint32_t adjacency_code(const Graph& g, const std::vector<Vertex>& perm) {
  std::uint32_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(perm[i], perm[j])) code |= std::uint32_t{1} << (j * (j - 1) / 2 + i);
    }
  }
  return code;
}

/**
 * Canonical form: the largest adjacency code over vertex orders that list
 * vertices by nondecreasing degree. Degree is an isomorphism invariant, so
 * restricting to degree-sorted orders keeps the form canonical while
 * cutting the permutations to within-degree-class ones.
 */
inline std::uint32_t canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<int, int>> classes;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = 0;
  // odometer over per-class permutations
  while (true) {
    best = std::max(best, adjacency_code(g, order));
    std::size_t k = 0;
    for (; k < classes.size(); ++k) {
      auto [b, e] = classes[k];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (k == classes.size()) break;
  }
  return best;
}

inline Graph graph_from_code(int n, std::uint32_t code) {
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> (j * (j - 1) / 2 + i)) & 1U) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

}  // namespace detail

/// All graphs on n <= 7 vertices up to isomorphism, built by adding one
/// vertex with every possible neighborhood to each class on n-1 vertices.
/// Output is sorted by canonical code, so it is deterministic.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > 7) throw cap_exceeded("enumerate_graphs supports 1 <= n <= 7");
  std::vector<std::uint32_t> level{0};  // K1
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : level) {
      Graph base = detail::graph_from_code(m - 1, code);
      auto edges = base.edges();
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (m - 1)); ++mask) {
        auto e = edges;
        for (int i = 0; i < m - 1; ++i) {
          if ((mask >> i) & 1U) e.emplace_back(i, m - 1);
        }
        next.insert(detail::canonical_code(Graph(m, e)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  for (std::uint32_t code : level) {
    Graph g = detail::graph_from_code(n, code);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<Graph> enumerate_connected(int n) { return enumerate_graphs(n, true); }

// ---------------------------------------------------------------------------
// Exhaustive parameter search
// ---------------------------------------------------------------------------

struct OracleResult {
  Parameter parameter;
  int value = 0;
  std::optional<VertexColoring> optimal_coloring;  // none when value is 0
  std::uint64_t colorings_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct OracleOptions {
  int palette_cap = 4;
  int max_order = 0;  // 0: default per parameter (16 for pvc, 12 for pvc_k k>=2, 14 for spvc)
  unsigned workers = 0;  // 0: hardware concurrency
  std::uint64_t budget = default_search_budget();
};

namespace detail {

inline int default_max_order(const Parameter& p) {
  if (p.kind == Parameter::Kind::spvc) return 14;
  return p.k == 1 ? 16 : 12;
}

/// Decides one candidate coloring. Owned by a single worker.
class ColoringChecker {
 public:
  ColoringChecker(const Graph& g, Parameter p, std::uint64_t budget)
      : g_(g), p_(p), budget_(budget), pairs_(pairs_hardest_first(g)) {
    // sources in decreasing eccentricity
    std::vector<std::pair<Distance, Vertex>> ecc;
    for (Vertex u = 0; u < g.order(); ++u) {
      auto d = bfs_distances(g, u);
      ecc.emplace_back(*std::max_element(d.begin(), d.end()), u);
    }
    std::stable_sort(ecc.begin(), ecc.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto [d, u] : ecc) sources_.push_back(u);
  }

  bool passes(const VertexColoring& c) {
    if (p_.kind == Parameter::Kind::spvc) return all_sources(c, &proper_geodesic_targets);
    if (p_.k == 1) return all_sources(c, &proper_path_targets);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      auto [u, v] = pairs_[i];
      if (!find_k_disjoint_proper_paths(g_, c, u, v, p_.k, budget_)) {
        // move-to-front: a pair that failed once tends to fail again
        std::rotate(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(i),
                    pairs_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        return false;
      }
    }
    return true;
  }

 private:
  template <class Targets>
  bool all_sources(const VertexColoring& c, Targets targets) {
    for (Vertex u : sources_) {
      auto ok = targets(g_, c, u);
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (v != u && !ok[v]) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  Parameter p_;
  std::uint64_t budget_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<Vertex> sources_;
};

/**
 * Restricted-growth strings over n positions using exactly `blocks` values,
 * in lexicographic order: a[0] = 0, a[i] <= max(a[0..i-1]) + 1. Each set
 * partition of the vertices into `blocks` color classes appears once.
 */
class RestrictedGrowth {
 public:
  RestrictedGrowth(int n, int blocks) : n_(n), blocks_(blocks) {}

  /// All feasible prefixes of the given length, in lexicographic order.
  std::vector<std::vector<int>> prefixes(int length) const {
    std::vector<std::vector<int>> out;
    std::vector<int> a{0};
    if (length <= 0) return {{}};
    collect(a, length, out);
    return out;
  }

  /// Visits completions of `prefix` in lexicographic order until `visit`
  /// returns true. Returns whether it did.
  template <class Visit>
  bool complete(std::vector<int>& a, Visit&& visit) const {
    const int pos = static_cast<int>(a.size());
    const int used = a.empty() ? 0 : *std::max_element(a.begin(), a.end()) + 1;
    if (pos == n_) return used == blocks_ && visit(a);
    if (blocks_ - used > n_ - pos) return false;
    const int top = std::min(used, blocks_ - 1);
    for (int x = 0; x <= top; ++x) {
      a.push_back(x);
      const bool done = complete(a, visit);
      a.pop_back();
      if (done) return true;
    }
    return false;
  }

 private:
  void collect(std::vector<int>& a, int length, std::vector<std::vector<int>>& out) const {
    const int pos = static_cast<int>(a.size());
    const int used = *std::max_element(a.begin(), a.end()) + 1;
    if (blocks_ - used > n_ - pos) return;
    if (pos == length) {
      out.push_back(a);
      return;
    }
    for (int x = 0; x <= std::min(used, blocks_ - 1); ++x) {
      a.push_back(x);
      collect(a, length, out);
      a.pop_back();
    }
  }

  int n_;
  int blocks_;
};

struct PaletteOutcome {
  std::optional<std::vector<int>> coloring;  // colors 1..palette
  std::uint64_t examined = 0;
};

/// Lexicographically least coloring with exactly `palette` color classes
/// that passes, searching prefix chunks on several workers.
inline PaletteOutcome search_palette(const Graph& g, Parameter p, int palette, unsigned workers,
                                     std::uint64_t budget) {
  const int n = g.order();
  RestrictedGrowth rgs(n, palette);
  const int depth = std::min(n, palette == 1 ? 1 : 6);
  const auto chunks = rgs.prefixes(depth);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_chunk{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> examined{0};
  std::mutex mu;
  std::vector<std::optional<std::vector<int>>> found(chunks.size());
  std::exception_ptr failure;

  auto work = [&] {
    try {
      ColoringChecker checker(g, p, budget);
      std::vector<int> colors(static_cast<std::size_t>(n));
      while (true) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= chunks.size() || idx > best_chunk.load()) return;
        std::vector<int> a = chunks[idx];
        std::uint64_t local = 0;
        rgs.complete(a, [&](const std::vector<int>& rgs_colors) {
          ++local;
          for (int i = 0; i < n; ++i) colors[i] = rgs_colors[i] + 1;
          if (!checker.passes(VertexColoring(colors))) return false;
          found[idx] = colors;
          return true;
        });
        examined += local;
        if (found[idx]) {
          std::size_t cur = best_chunk.load();
          while (idx < cur && !best_chunk.compare_exchange_weak(cur, idx)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      best_chunk = 0;
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(chunks.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  PaletteOutcome out;
  out.examined = examined.load();
  for (auto& f : found) {
    if (f) {
      out.coloring = std::move(f);
      break;
    }
  }
  return out;
}

inline OracleResult run_oracle(const Graph& g, Parameter p, const OracleOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const int max_order = opt.max_order > 0 ? opt.max_order : default_max_order(p);
  if (g.order() > max_order) {
    throw cap_exceeded("oracle " + p.name() + ": order " + std::to_string(g.order()) + " exceeds cap " +
                       std::to_string(max_order));
  }
  if (g.order() < 2) throw precondition_error("oracle needs a nontrivial graph");
  if (p.kind == Parameter::Kind::spvc) {
    if (!is_connected(g)) throw precondition_error("spvc is defined for connected graphs");
  } else {
    require_k_in_range(g, p.k);
  }

  OracleResult result;
  result.parameter = p;
  const bool zero_allowed = is_complete(g) && (p.kind == Parameter::Kind::spvc || p.k == 1);
  if (zero_allowed) {
    result.value = 0;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }
  const unsigned workers = opt.workers > 0 ? opt.workers : std::max(1U, std::thread::hardware_concurrency());
  for (int palette = 1; palette <= std::min(opt.palette_cap, g.order()); ++palette) {
    auto outcome = search_palette(g, p, palette, workers, opt.budget);
    result.colorings_examined += outcome.examined;
    if (outcome.coloring) {
      result.value = palette;
      result.optimal_coloring = VertexColoring(std::move(*outcome.coloring));
      result.elapsed = std::chrono::steady_clock::now() - start;
      return result;
    }
  }
  throw cap_exceeded("oracle " + p.name() + ": no coloring with at most " + std::to_string(opt.palette_cap) +
                     " colors");
}

}  // namespace detail

/// Exact pvc_k(G): smallest palette making G proper vertex k-connected
/// (0 for complete G when k = 1). Needs 1 <= k <= kappa(G).
inline OracleResult brute_pvc_k(const Graph& g, int k, const OracleOptions& opt = {}) {
  return detail::run_oracle(g, Parameter::pvc(k), opt);
}

/// Exact spvc(G) (0 for complete G). Needs G connected.
inline OracleResult brute_spvc(const Graph& g, const OracleOptions& opt = {}) {
  return detail::run_oracle(g, Parameter::spvc(), opt);
}

/// True iff some coloring with exactly `palette` color classes satisfies
/// the parameter's requirement. Used to re-confirm optimality.
inline bool feasible_with_palette(const Graph& g, Parameter p, int palette, const OracleOptions& opt = {}) {
  if (palette < 1 || palette > g.order()) return false;
  const unsigned workers = opt.workers > 0 ? opt.workers : std::max(1U, std::thread::hardware_concurrency());
  return detail::search_palette(g, p, palette, workers, opt.budget).coloring.has_value();
}

}  // namespace pvclab

#endif  // PVCLAB_ORACLE_HPP
