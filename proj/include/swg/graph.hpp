#ifndef SWG_GRAPH_HPP
#define SWG_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace swg {

constexpr int kMaxVertices = 16;
constexpr int kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;  // 120

/// 128-bit edge set, one bit per unordered pair. Compared as a single
/// 128-bit number (hi word more significant).
struct EdgeBits {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  constexpr bool test(int k) const {
    return k < 64 ? (lo >> k) & 1u : (hi >> (k - 64)) & 1u;
  }
  constexpr void set(int k) {
    if (k < 64) lo |= std::uint64_t{1} << k;
    else        hi |= std::uint64_t{1} << (k - 64);
  }
  constexpr void reset(int k) {
    if (k < 64) lo &= ~(std::uint64_t{1} << k);
    else        hi &= ~(std::uint64_t{1} << (k - 64));
  }
  constexpr void flip(int k) {
    if (k < 64) lo ^= std::uint64_t{1} << k;
    else        hi ^= std::uint64_t{1} << (k - 64);
  }
  constexpr int count() const {
    return std::popcount(lo) + std::popcount(hi);
  }
  constexpr bool any() const { return lo != 0 || hi != 0; }

  friend constexpr EdgeBits operator^(EdgeBits a, EdgeBits b) {
    return {a.lo ^ b.lo, a.hi ^ b.hi};
  }
  friend constexpr EdgeBits operator&(EdgeBits a, EdgeBits b) {
    return {a.lo & b.lo, a.hi & b.hi};
  }
  friend constexpr EdgeBits operator|(EdgeBits a, EdgeBits b) {
    return {a.lo | b.lo, a.hi | b.hi};
  }

  constexpr bool operator==(const EdgeBits&) const = default;
  constexpr std::strong_ordering operator<=>(const EdgeBits& o) const {
    if (hi != o.hi) return hi <=> o.hi;
    return lo <=> o.lo;
  }
};

/// All pair bits set for the first `pairs` positions.
constexpr EdgeBits full_edge_mask(int pairs) {
  EdgeBits m;
  if (pairs >= 64) {
    m.lo = ~std::uint64_t{0};
    if (pairs > 64) m.hi = (~std::uint64_t{0}) >> (128 - pairs);
  } else if (pairs > 0) {
    m.lo = (~std::uint64_t{0}) >> (64 - pairs);
  }
  return m;
}

/// Bit mask over vertices; bit v stands for vertex v.
using VertexSet = std::uint32_t;

inline VertexSet vset(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= VertexSet{1} << v;
  return s;
}

/// Colex pair index: bit j(j-1)/2 + i for i < j. Stable as n grows.
constexpr int pair_index(int i, int j) {
  if (i > j) { int t = i; i = j; j = t; }
  return j * (j - 1) / 2 + i;
}

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// A simple loopless undirected graph on vertices 0..n-1.
/// The representation cannot encode loops or directions.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, EdgeBits bits);

  int order() const { return n_; }
  const EdgeBits& bits() const { return edges_; }

  bool has_edge(int u, int v) const { return edges_.test(pair_index(u, v)); }
  void set_edge(int u, int v, bool present = true);
  void toggle_edge(int u, int v);

  int edge_count() const { return edges_.count(); }
  int degree(int v) const;
  VertexSet neighbors(int v) const;
  std::vector<int> degree_sequence() const;  // sorted ascending
  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const Graph&) const = default;
  auto operator<=>(const Graph&) const = default;

private:
  int n_ = 0;
  EdgeBits edges_;
};

Graph make_graph(int n, std::span<const std::pair<int, int>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph complete(int n);
Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);

/// K_{A, X\A}: all edges between A and its complement (spanning bipartite).
Graph complete_bipartite(int n, VertexSet a);

Graph symmetric_difference(const Graph& g1, const Graph& g2);

/// Relabels the second operand upward by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

/// Induced subgraph on Z, relabeled by increasing original index.
Graph induced(const Graph& g, VertexSet z);

}  // namespace swg

#endif
