#ifndef PVCLAB_GRAPH_HPP
#define PVCLAB_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pvclab/errors.hpp"

namespace pvclab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Path = std::vector<Vertex>;

/**
 * Length of a shortest walk, or Infinity when no walk exists.
 *
 * Infinity is a distinct state rather than a large integer, so arithmetic
 * and comparisons never overflow into a plausible-looking length.
 */
class Distance {
 public:
  constexpr Distance() = default;  // Infinity
  constexpr explicit Distance(std::uint32_t value) : value_(value) {}

  static constexpr Distance infinity() { return Distance{}; }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }

  constexpr std::uint32_t value() const {
    if (!value_) throw std::logic_error("Distance::value() on Infinity");
    return *value_;
  }

  friend constexpr bool operator==(const Distance&, const Distance&) = default;

  friend constexpr std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

  friend constexpr bool operator==(const Distance& a, std::uint32_t b) {
    return a.is_finite() && *a.value_ == b;
  }

  friend constexpr Distance operator+(const Distance& a, const Distance& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Distance{*a.value_ + *b.value_};
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend std::ostream& operator<<(std::ostream& os, const Distance& d) { return os << d.to_string(); }

 private:
  std::optional<std::uint32_t> value_;
};

/// Shortest even-length and odd-length walk between two vertices.
struct ParityDistance {
  Distance even;
  Distance odd;

  Distance shortest() const { return std::min(even, odd); }
  Distance of_parity(int parity) const { return parity % 2 == 0 ? even : odd; }

  friend bool operator==(const ParityDistance&, const ParityDistance&) = default;
};

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is kept twice: a bitset row per vertex for O(1) adjacency tests
 * and a sorted neighbor list per vertex for iteration in ascending order.
 * Optional per-vertex labels record provenance (e.g. "(g,h)" for product
 * vertices); they do not take part in equality.
 */
class Graph {
 public:
  /// Single isolated vertex.
  Graph() : Graph(1) {}

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : Graph(n, std::span<const Edge>{}) {}

  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n < 1) throw precondition_error("graph must have at least one vertex");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
      throw precondition_error("label count does not match vertex count");
    }
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(words_ * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw precondition_error("edge endpoint out of range");
      if (u == v) throw precondition_error("self-loops are not allowed");
      set_bit(u, v);
      set_bit(v, u);
    }
    build_lists();
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[row(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  bool is_vertex(Vertex v) const { return v >= 0 && v < n_; }

  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
  }

  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  Graph with_labels(std::vector<std::string> labels) const {
    auto e = edges();
    return Graph(n_, e, std::move(labels));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  std::size_t row(Vertex u) const { return static_cast<std::size_t>(u) * words_; }

  void set_bit(Vertex u, Vertex v) { bits_[row(u) + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }

  void build_lists() {
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    adj_.clear();
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (adjacent(u, v)) adj_.push_back(v);
      }
      offsets_[static_cast<std::size_t>(u) + 1] = adj_.size();
    }
    edge_count_ = adj_.size() / 2;
  }

  int n_ = 1;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

inline void require_vertex(const Graph& g, Vertex v) {
  if (!g.is_vertex(v)) {
    throw precondition_error("vertex " + std::to_string(v) + " out of range for graph of order " +
                             std::to_string(g.order()));
  }
}

}  // namespace pvclab

#endif  // PVCLAB_GRAPH_HPP
