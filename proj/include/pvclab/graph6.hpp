#ifndef PVCLAB_GRAPH6_HPP
#define PVCLAB_GRAPH6_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pvclab/graph.hpp"

namespace pvclab {

/// Malformed graph6 text.
class graph6_error : public std::invalid_argument {
 public:
  explicit graph6_error(const std::string& what) : std::invalid_argument("graph6: " + what) {}
};

namespace detail {

constexpr std::uint64_t graph6_small_limit = 62;
constexpr std::uint64_t graph6_medium_limit = 258047;
constexpr std::uint64_t graph6_large_limit = 68719476735;

inline void encode_order(std::string& out, std::uint64_t n) {
  auto push_bits = [&](int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3F) + 63));
  };
  if (n <= graph6_small_limit) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= graph6_medium_limit) {
    out.push_back('~');
    push_bits(3);
  } else {
    out.push_back('~');
    out.push_back('~');
    push_bits(6);
  }
}

}  // namespace detail

/// graph6 text (no header, no newline). Bits of the upper triangle go
/// column by column, (0,1),(0,2),(1,2),(0,3),..., six per byte, most
/// significant first, each byte offset by 63, zero-padded at the end.
inline std::string emit_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  detail::encode_order(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/**
 * Parses one graph6 string. An optional ">>graph6<<" header and trailing
 * line terminators are accepted. Rejects bytes outside 63..126, a wrong
 * body length, nonzero padding bits, and non-canonical order encodings.
 */
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw graph6_error("empty input");
  for (char ch : text) {
    const auto b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) throw graph6_error("byte " + std::to_string(b) + " outside 63..126");
  }

  std::size_t pos = 0;
  auto take6 = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw graph6_error("truncated vertex count");
    return static_cast<std::uint64_t>(static_cast<unsigned char>(text[pos++]) - 63);
  };
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take6();
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | take6();
    if (n <= detail::graph6_medium_limit) throw graph6_error("non-canonical 8-byte vertex count");
  } else {
    pos = 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | take6();
    if (n <= detail::graph6_small_limit) throw graph6_error("non-canonical 4-byte vertex count");
  }
  if (n == 0) throw graph6_error("graphs must have at least one vertex");
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max() / 2)) throw graph6_error("graph too large");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw graph6_error("expected " + std::to_string(body) + " adjacency bytes, found " +
                       std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const auto byte = static_cast<unsigned>(static_cast<unsigned char>(text[pos + bit / 6]) - 63);
      if ((byte >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const auto last = static_cast<unsigned>(static_cast<unsigned char>(text.back()) - 63);
    const unsigned pad_mask = (1U << (6 - bit % 6)) - 1;
    if (last & pad_mask) throw graph6_error("nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace pvclab

#endif  // PVCLAB_GRAPH6_HPP
