#pragma once

// Exhaustive reference implementations used only by tests. Everything here
// is deliberately naive: enumerate all paths, all subsets, all colorings.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "pvclab/graph.hpp"

namespace brute {

using pvclab::Graph;
using pvclab::Path;
using pvclab::Vertex;

inline std::vector<Path> simple_paths(const Graph& g, Vertex u, Vertex v) {
  std::vector<Path> out;
  Path cur{u};
  std::vector<bool> used(g.order(), false);
  used[u] = true;
  std::function<void(Vertex)> go = [&](Vertex x) {
    if (x == v) {
      out.push_back(cur);
      return;
    }
    for (Vertex y = 0; y < g.order(); ++y) {
      if (!g.adjacent(x, y) || used[y]) continue;
      used[y] = true;
      cur.push_back(y);
      go(y);
      cur.pop_back();
      used[y] = false;
    }
  };
  go(u);
  return out;
}

inline bool proper(const Path& p, const std::vector<int>& c) {
  for (std::size_t i = 1; i + 2 < p.size(); ++i) {
    if (c[p[i]] == c[p[i + 1]]) return false;
  }
  return true;
}

inline int bfs_distance(const Graph& g, Vertex u, Vertex v) {
  std::vector<int> d(g.order(), -1);
  std::vector<Vertex> q{u};
  d[u] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (Vertex y = 0; y < g.order(); ++y) {
      if (g.adjacent(q[i], y) && d[y] < 0) {
        d[y] = d[q[i]] + 1;
        q.push_back(y);
      }
    }
  }
  return d[v];
}

inline bool connected(const Graph& g) {
  for (Vertex v = 1; v < g.order(); ++v) {
    if (bfs_distance(g, 0, v) < 0) return false;
  }
  return true;
}

/// k internally disjoint proper u-v paths, by trying every k-subset of
/// proper paths.
inline bool has_k_disjoint_proper(const Graph& g, const std::vector<int>& c, Vertex u, Vertex v, int k) {
  std::vector<Path> paths;
  for (auto& p : simple_paths(g, u, v)) {
    if (proper(p, c)) paths.push_back(std::move(p));
  }
  std::vector<int> owner(g.order(), -1);
  std::function<bool(std::size_t, int)> pick = [&](std::size_t from, int left) {
    if (left == 0) return true;
    for (std::size_t i = from; i < paths.size(); ++i) {
      const Path& p = paths[i];
      bool free = true;
      for (std::size_t j = 1; j + 1 < p.size(); ++j) free = free && owner[p[j]] < 0;
      if (!free) continue;
      for (std::size_t j = 1; j + 1 < p.size(); ++j) owner[p[j]] = static_cast<int>(i);
      if (pick(i + 1, left - 1)) return true;
      for (std::size_t j = 1; j + 1 < p.size(); ++j) owner[p[j]] = -1;
    }
    return false;
  };
  return pick(0, k);
}

inline bool has_proper_geodesic(const Graph& g, const std::vector<int>& c, Vertex u, Vertex v) {
  const int d = bfs_distance(g, u, v);
  for (const auto& p : simple_paths(g, u, v)) {
    if (static_cast<int>(p.size()) == d + 1 && proper(p, c)) return true;
  }
  return false;
}

inline bool satisfies(const Graph& g, const std::vector<int>& c, int k, bool spvc) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool ok = spvc ? has_proper_geodesic(g, c, u, v) : has_k_disjoint_proper(g, c, u, v, k);
      if (!ok) return false;
    }
  }
  return true;
}

/// Minimum palette over all raw colorings in [1..p]^n (0 for complete graphs
/// when k = 1 or spvc).
inline int parameter(const Graph& g, int k, bool spvc, int max_palette = 3) {
  const int n = g.order();
  if (static_cast<int>(g.size()) == n * (n - 1) / 2 && (spvc || k == 1)) return 0;
  for (int p = 1; p <= max_palette; ++p) {
    std::vector<int> c(n, 1);
    while (true) {
      if (satisfies(g, c, k, spvc)) return p;
      int i = 0;
      while (i < n && c[i] == p) c[i++] = 1;
      if (i == n) break;
      ++c[i];
    }
  }
  return -1;
}

/// Vertex connectivity by removing every vertex subset.
inline int connectivity(const Graph& g) {
  const int n = g.order();
  if (static_cast<int>(g.size()) == n * (n - 1) / 2) return n - 1;
  int best = n - 1;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int removed = __builtin_popcount(mask);
    if (removed >= best || removed > n - 2) continue;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
      if (!(mask >> v & 1U)) keep.push_back(v);
    }
    std::vector<pvclab::Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (g.adjacent(keep[i], keep[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    if (!connected(Graph(static_cast<int>(keep.size()), edges))) best = removed;
  }
  return best;
}

inline int chromatic(const Graph& g) {
  const int n = g.order();
  for (int p = 1; p <= n; ++p) {
    std::vector<int> c(n, 0);
    std::function<bool(int)> go = [&](int v) {
      if (v == n) return true;
      for (int col = 1; col <= p; ++col) {
        bool fine = true;
        for (Vertex u = 0; u < v; ++u) fine = fine && !(g.adjacent(u, v) && c[u] == col);
        if (!fine) continue;
        c[v] = col;
        if (go(v + 1)) return true;
      }
      return false;
    };
    if (go(0)) return p;
  }
  return n;
}

/// Isomorphism by trying all permutations.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (Vertex u = 0; u < a.order() && same; ++u) {
      for (Vertex v = u + 1; v < a.order() && same; ++v) same = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every graph on n labeled vertices.
inline std::vector<Graph> all_labeled(int n) {
  std::vector<pvclab::Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1U << slots.size()); ++mask) {
    std::vector<pvclab::Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1U) edges.push_back(slots[i]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace brute
