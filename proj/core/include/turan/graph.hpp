#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace turan {

inline constexpr int kMaxVertices = 64;

/// Set of vertex labels packed into one machine word (bit v <=> vertex v).
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }

/// Mask with bits 0..n-1 set.
constexpr VertexSet low_mask(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int popcount(VertexSet s) noexcept { return std::popcount(s); }
constexpr int lowest(VertexSet s) noexcept { return std::countr_zero(s); }

/// Calls f(v) for every vertex in s, ascending.
template <typename F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

/// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
  int u = 0;
  int v = 0;

  static constexpr Edge of(int x, int y) noexcept {
    return x < y ? Edge{x, y} : Edge{y, x};
  }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// A K3 on {a, b, c} with a < b < c.
struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;

  static Triangle of(int x, int y, int z) noexcept;
  std::array<Edge, 3> edges() const noexcept {
    return {Edge{a, b}, Edge{a, c}, Edge{b, c}};
  }
  VertexSet vertices() const noexcept { return bit(a) | bit(b) | bit(c); }
  friend constexpr auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Simple undirected graph on at most 64 labeled vertices.
///
/// Adjacency is kept as one bitmask row per vertex. The rows are always
/// symmetric, loop-free and clear above bit n-1; every factory validates its
/// input and every transformation returns a fresh value.
class Graph {
 public:
  /// Edgeless graph on n vertices, 1 <= n <= 64.
  static Graph empty(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);
  /// Builds from adjacency rows, validating symmetry, loops and range. An
  /// empty span gives the order-0 null graph (only reachable this way).
  static Graph from_rows(std::span<const VertexSet> rows);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept;

  VertexSet neighbors(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return popcount(rows_[v]); }
  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  VertexSet vertices() const noexcept { return low_mask(n_); }
  std::span<const VertexSet> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edges(const std::vector<Edge>& extra) const;
  Graph without_edges(const std::vector<Edge>& removed) const;
  /// Relabels vertex v to perm[v]; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& x, const Graph& y) noexcept {
    return x.n_ == y.n_ && x.rows_ == y.rows_;
  }

 private:
  explicit Graph(int n) : n_(n) {}

  int n_ = 1;
  std::array<VertexSet, kMaxVertices> rows_{};
};

/// Induced subgraph relabeled to 0..k-1 in increasing original order.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;  // labels[i] = original vertex of new vertex i
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet vs);

/// G[N(v)] with a map back to the original labels. An isolated v yields the
/// null graph and an empty label map.
InducedSubgraph neighborhood_subgraph(const Graph& g, int v);

std::size_t count_triangles(const Graph& g) noexcept;
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Number of triangles through edge uv (u, v adjacent or not).
inline int common_neighbors(const Graph& g, int u, int v) noexcept {
  return popcount(g.neighbors(u) & g.neighbors(v));
}

/// Drops every edge that lies in no triangle. Triangles are unaffected, so a
/// single pass is already a fixed point.
Graph edge_minimal_reduction(const Graph& g);

/// Graph on n vertices whose edge set is the union of the triangles' edges.
Graph union_of_triangles(int n, std::span<const Triangle> ts);

namespace detail {
/// Triangle count on raw rows; the hot-path twin of count_triangles.
std::size_t count_triangles(std::span<const VertexSet> rows) noexcept;
}  // namespace detail

}  // namespace turan
