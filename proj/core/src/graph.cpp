#include "turan/graph.hpp"

#include <algorithm>
#include <string>

#include "turan/error.hpp"

namespace turan {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kVertexCountOutOfRange: return "vertex_count_out_of_range";
    case ErrorCode::kVertexOutOfRange: return "vertex_out_of_range";
    case ErrorCode::kLoopEdge: return "loop_edge";
    case ErrorCode::kGraph6MalformedHeader: return "graph6_malformed_header";
    case ErrorCode::kGraph6UnsupportedSize: return "graph6_unsupported_size";
    case ErrorCode::kGraph6InvalidCharacter: return "graph6_invalid_character";
    case ErrorCode::kGraph6Truncated: return "graph6_truncated";
    case ErrorCode::kGraph6TrailingGarbage: return "graph6_trailing_garbage";
    case ErrorCode::kGraph6PaddingBits: return "graph6_padding_bits";
    case ErrorCode::kSizeGuard: return "size_guard";
    case ErrorCode::kResourceGuard: return "resource_guard";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kUnsupportedFixedSet: return "unsupported_fixed_set";
    case ErrorCode::kPreconditionViolated: return "precondition_violated";
    case ErrorCode::kOverflow: return "overflow";
  }
  return "unknown";
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorCode::kVertexCountOutOfRange,
                "vertex count " + std::to_string(n) + " outside 1..64");
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  }
}

}  // namespace

Triangle Triangle::of(int x, int y, int z) noexcept {
  std::array<int, 3> t{x, y, z};
  std::sort(t.begin(), t.end());
  return Triangle{t[0], t[1], t[2]};
}

Graph Graph::empty(int n) {
  check_order(n);
  return Graph(n);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  check_order(n);
  Graph g(n);
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) {
      throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(e.u));
    }
    g.rows_[e.u] |= bit(e.v);
    g.rows_[e.v] |= bit(e.u);
  }
  return g;
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kVertexCountOutOfRange, "more than 64 adjacency rows");
  }
  Graph g(n);
  const VertexSet valid = n == 0 ? 0 : low_mask(n);
  for (int v = 0; v < n; ++v) {
    const VertexSet row = rows[v];
    if ((row & ~valid) != 0) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "row " + std::to_string(v) + " has bits beyond vertex count");
    }
    if (row & bit(v)) {
      throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(v));
    }
    g.rows_[v] = row;
  }
  for (int v = 0; v < n; ++v) {
    for_each_vertex(g.rows_[v], [&](int u) {
      if (!(g.rows_[u] & bit(v))) {
        throw Error(ErrorCode::kInvalidArgument, "adjacency rows are not symmetric");
      }
    });
  }
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(popcount(rows_[v]));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(rows_[u] & ~low_mask(u + 1), [&](int v) { out.push_back(Edge{u, v}); });
  }
  return out;
}

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
  Graph g = *this;
  for (const Edge& e : extra) {
    check_vertex(n_, e.u);
    check_vertex(n_, e.v);
    if (e.u == e.v) throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(e.u));
    g.rows_[e.u] |= bit(e.v);
    g.rows_[e.v] |= bit(e.u);
  }
  return g;
}

Graph Graph::without_edges(const std::vector<Edge>& removed) const {
  Graph g = *this;
  for (const Edge& e : removed) {
    check_vertex(n_, e.u);
    check_vertex(n_, e.v);
    g.rows_[e.u] &= ~bit(e.v);
    g.rows_[e.v] &= ~bit(e.u);
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorCode::kInvalidArgument, "permutation length differs from vertex count");
  }
  VertexSet seen = 0;
  for (int p : perm) {
    check_vertex(n_, p);
    seen |= bit(p);
  }
  if (popcount(seen) != n_) {
    throw Error(ErrorCode::kInvalidArgument, "relabeling is not a permutation");
  }
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    VertexSet row = 0;
    for_each_vertex(rows_[v], [&](int u) { row |= bit(perm[u]); });
    g.rows_[perm[v]] = row;
  }
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet vs) {
  vs &= g.vertices();
  InducedSubgraph out{Graph::from_rows({}), {}};
  std::array<int, kMaxVertices> index{};
  for_each_vertex(vs, [&](int v) {
    index[v] = static_cast<int>(out.labels.size());
    out.labels.push_back(v);
  });
  std::vector<VertexSet> rows(out.labels.size(), 0);
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    for_each_vertex(g.neighbors(out.labels[i]) & vs, [&](int u) { rows[i] |= bit(index[u]); });
  }
  out.graph = Graph::from_rows(rows);
  return out;
}

InducedSubgraph neighborhood_subgraph(const Graph& g, int v) {
  check_vertex(g.order(), v);
  return induced_subgraph(g, g.neighbors(v));
}

namespace detail {

std::size_t count_triangles(std::span<const VertexSet> rows) noexcept {
  std::size_t total = 0;
  const int n = static_cast<int>(rows.size());
  for (int u = 0; u < n; ++u) {
    const VertexSet above_u = rows[u] & ~low_mask(u + 1);
    for_each_vertex(above_u, [&](int v) {
      total += static_cast<std::size_t>(popcount(rows[v] & above_u & ~low_mask(v + 1)));
    });
  }
  return total;
}

}  // namespace detail

std::size_t count_triangles(const Graph& g) noexcept { return detail::count_triangles(g.rows()); }

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int a = 0; a < g.order(); ++a) {
    const VertexSet above_a = g.neighbors(a) & ~low_mask(a + 1);
    for_each_vertex(above_a, [&](int b) {
      for_each_vertex(g.neighbors(b) & above_a & ~low_mask(b + 1),
                      [&](int c) { out.push_back(Triangle{a, b, c}); });
    });
  }
  return out;
}

Graph edge_minimal_reduction(const Graph& g) {
  std::vector<Edge> dead;
  for (const Edge& e : g.edges()) {
    if (common_neighbors(g, e.u, e.v) == 0) dead.push_back(e);
  }
  return g.without_edges(dead);
}

Graph union_of_triangles(int n, std::span<const Triangle> ts) {
  std::vector<Edge> edges;
  edges.reserve(ts.size() * 3);
  for (const Triangle& t : ts) {
    for (const Edge& e : t.edges()) edges.push_back(e);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace turan
