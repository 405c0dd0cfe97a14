#ifndef PVCLAB_PRODUCTS_HPP
#define PVCLAB_PRODUCTS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvclab/errors.hpp"
#include "pvclab/graph.hpp"
#include "pvclab/graph_core.hpp"

namespace pvclab {

enum class ProductKind { join, cartesian, lexicographic, strong, direct };

inline std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::join: return "join";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::strong: return "strong";
    case ProductKind::direct: return "direct";
  }
  return "?";
}

inline std::optional<ProductKind> parse_product_kind(std::string_view name) {
  for (auto k : {ProductKind::join, ProductKind::cartesian, ProductKind::lexicographic, ProductKind::strong,
                 ProductKind::direct}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

/**
 * A join or product together with the map back to its factors.
 *
 * For the four products, vertex (g,h) has index g*|H| + h. For the join the
 * left factor occupies 0..|G|-1 and the right factor |G|..|G|+|H|-1.
 */
struct ProductGraph {
  Graph graph;
  ProductKind kind = ProductKind::cartesian;
  int left_order = 1;
  int right_order = 1;

  int order() const { return graph.order(); }

  Vertex vertex_of(Vertex g, Vertex h) const {
    if (kind == ProductKind::join) throw precondition_error("join vertices have no (g,h) coordinates");
    return g * right_order + h;
  }

  std::pair<Vertex, Vertex> coordinates(Vertex v) const {
    if (kind == ProductKind::join) throw precondition_error("join vertices have no (g,h) coordinates");
    return {v / right_order, v % right_order};
  }

  /// For a join: (0, i) for the i-th left vertex, (1, j) for the j-th right vertex.
  std::pair<int, Vertex> join_side(Vertex v) const {
    if (kind != ProductKind::join) throw precondition_error("join_side on a non-join product");
    return v < left_order ? std::pair{0, v} : std::pair{1, v - left_order};
  }

  /// Strong products only: true for edges that move in exactly one coordinate.
  bool is_cartesian_edge(Vertex u, Vertex v) const {
    if (kind != ProductKind::strong) throw precondition_error("edge classification applies to strong products");
    if (!graph.adjacent(u, v)) throw precondition_error("not an edge");
    auto [g, h] = coordinates(u);
    auto [g2, h2] = coordinates(v);
    return g == g2 || h == h2;
  }
};

namespace detail {

inline std::vector<std::string> pair_labels(int left, int right) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(left) * right);
  for (int g = 0; g < left; ++g) {
    for (int h = 0; h < right; ++h) labels.push_back("(" + std::to_string(g) + "," + std::to_string(h) + ")");
  }
  return labels;
}

template <class Adjacent>
ProductGraph build_product(const Graph& a, const Graph& b, ProductKind kind, Adjacent adjacent) {
  const int na = a.order();
  const int nb = b.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < na * nb; ++u) {
    for (Vertex v = u + 1; v < na * nb; ++v) {
      if (adjacent(u / nb, u % nb, v / nb, v % nb)) edges.emplace_back(u, v);
    }
  }
  return {Graph(na * nb, edges, pair_labels(na, nb)), kind, na, nb};
}

}  // namespace detail

/// G v H: disjoint union plus every edge between the two sides.
inline ProductGraph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int nb = b.order();
  std::vector<Edge> edges = a.edges();
  for (auto [x, y] : b.edges()) edges.emplace_back(na + x, na + y);
  for (Vertex x = 0; x < na; ++x) {
    for (Vertex y = 0; y < nb; ++y) edges.emplace_back(x, na + y);
  }
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i) labels.push_back("L:" + std::to_string(i));
  for (int j = 0; j < nb; ++j) labels.push_back("R:" + std::to_string(j));
  return {Graph(na + nb, edges, std::move(labels)), ProductKind::join, na, nb};
}

inline ProductGraph cartesian(const Graph& a, const Graph& b) {
  return detail::build_product(a, b, ProductKind::cartesian, [&](Vertex g, Vertex h, Vertex g2, Vertex h2) {
    return (g == g2 && b.adjacent(h, h2)) || (h == h2 && a.adjacent(g, g2));
  });
}

inline ProductGraph lexicographic(const Graph& a, const Graph& b) {
  return detail::build_product(a, b, ProductKind::lexicographic, [&](Vertex g, Vertex h, Vertex g2, Vertex h2) {
    return a.adjacent(g, g2) || (g == g2 && b.adjacent(h, h2));
  });
}

inline ProductGraph strong(const Graph& a, const Graph& b) {
  return detail::build_product(a, b, ProductKind::strong, [&](Vertex g, Vertex h, Vertex g2, Vertex h2) {
    const bool ga = a.adjacent(g, g2);
    const bool hb = b.adjacent(h, h2);
    return (ga && h == h2) || (g == g2 && hb) || (ga && hb);
  });
}

inline ProductGraph direct(const Graph& a, const Graph& b) {
  return detail::build_product(a, b, ProductKind::direct, [&](Vertex g, Vertex h, Vertex g2, Vertex h2) {
    return a.adjacent(g, g2) && b.adjacent(h, h2);
  });
}

inline ProductGraph make_product(ProductKind kind, const Graph& a, const Graph& b) {
  switch (kind) {
    case ProductKind::join: return join(a, b);
    case ProductKind::cartesian: return cartesian(a, b);
    case ProductKind::lexicographic: return lexicographic(a, b);
    case ProductKind::strong: return strong(a, b);
    case ProductKind::direct: return direct(a, b);
  }
  throw precondition_error("unknown product kind");
}

// ---------------------------------------------------------------------------
// Distance formulas
// ---------------------------------------------------------------------------

/// Product distance predicted from factor distances:
///   cartesian      d_G + d_H
///   lexicographic  d_G if g != g'; d_H if g = g' and g isolated; min(d_H, 2) otherwise
///   strong         max(d_G, d_H)
///   direct         min(max(d^e_G, d^e_H), max(d^o_G, d^o_H)); infinite at isolated coordinates
class DistanceFormula {
 public:
  DistanceFormula(ProductKind kind, const Graph& a, const Graph& b) : kind_(kind), a_(a), b_(b) {
    if (kind == ProductKind::join) throw precondition_error("no distance formula for the join");
    if (kind == ProductKind::direct) {
      for (Vertex g = 0; g < a.order(); ++g) parity_a_.push_back(parity_distances_from(a, g));
      for (Vertex h = 0; h < b.order(); ++h) parity_b_.push_back(parity_distances_from(b, h));
    }
  }

  Distance operator()(Vertex g, Vertex h, Vertex g2, Vertex h2) const {
    switch (kind_) {
      case ProductKind::cartesian: return da_(g, g2) + db_(h, h2);
      case ProductKind::lexicographic:
        if (g != g2) return da_(g, g2);
        if (a_.degree(g) == 0) return db_(h, h2);
        return std::min(db_(h, h2), Distance{2});
      case ProductKind::strong: return std::max(da_(g, g2), db_(h, h2));
      case ProductKind::direct: {
        // a walk can only be padded to a longer one of equal parity from a non-isolated vertex
        if (g == g2 && h == h2) return Distance{0};
        if (a_.degree(g) == 0 || a_.degree(g2) == 0 || b_.degree(h) == 0 || b_.degree(h2) == 0) {
          return Distance::infinity();
        }
        const auto& pa = parity_a_[g][g2];
        const auto& pb = parity_b_[h][h2];
        return std::min(std::max(pa.even, pb.even), std::max(pa.odd, pb.odd));
      }
      case ProductKind::join: break;
    }
    return Distance::infinity();
  }

 private:
  ProductKind kind_;
  const Graph& a_;
  const Graph& b_;
  DistanceMatrix da_{a_};
  DistanceMatrix db_{b_};
  std::vector<std::vector<ParityDistance>> parity_a_;
  std::vector<std::vector<ParityDistance>> parity_b_;
};

struct DistanceCounterexample {
  Vertex u = 0;
  Vertex v = 0;
  Distance bfs;
  Distance formula;
};

struct DistanceFormulaReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  bool exhaustive = true;
  std::optional<DistanceCounterexample> counterexample;
};

/// Compares BFS distances in the product with the factor formula: every
/// ordered pair when the product has at most 256 vertices, otherwise
/// 10,000 sampled pairs.
inline DistanceFormulaReport verify_distance_formula(ProductKind kind, const Graph& a, const Graph& b,
                                                     std::uint64_t seed = 0x5eed) {
  const DistanceFormula formula(kind, a, b);
  const ProductGraph p = make_product(kind, a, b);
  const int n = p.order();
  DistanceFormulaReport report;

  auto check = [&](Vertex u, const std::vector<Distance>& from_u, Vertex v) {
    ++report.pairs_checked;
    auto [g, h] = p.coordinates(u);
    auto [g2, h2] = p.coordinates(v);
    const Distance predicted = formula(g, h, g2, h2);
    if (predicted != from_u[v] && report.pass) {
      report.pass = false;
      report.counterexample = DistanceCounterexample{u, v, from_u[v], predicted};
    }
  };

  if (n <= 256) {
    for (Vertex u = 0; u < n; ++u) {
      auto from_u = bfs_distances(p.graph, u);
      for (Vertex v = 0; v < n; ++v) check(u, from_u, v);
    }
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10000; ++i) {
      auto u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      auto v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      check(u, bfs_distances(p.graph, u), v);
    }
  }
  return report;
}

}  // namespace pvclab

#endif  // PVCLAB_PRODUCTS_HPP
