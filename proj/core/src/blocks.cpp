#include "turan/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "turan/bounds.hpp"

namespace turan {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

int edge_slot(const Edge& e) { return e.u * kMaxVertices + e.v; }

}  // namespace

std::string describe(const BlockClass& c) {
  switch (c.kind) {
    case BlockKind::kK4: return "K4";
    case BlockKind::kBook: return "Book(" + std::to_string(c.pages) + ")";
    case BlockKind::kOther: return "Other";
  }
  return "Other";
}

BlockClass classify_block(const std::vector<Edge>& edges) {
  if (edges.empty()) return BlockClass{};
  int top = 0;
  for (const Edge& e : edges) top = std::max({top, e.u, e.v});
  const Graph h = Graph::from_edges(top + 1, edges);
  const auto triangles = enumerate_triangles(h);

  VertexSet vs = 0;
  for (const Edge& e : edges) vs |= bit(e.u) | bit(e.v);
  const int v_count = popcount(vs);
  const auto e_count = static_cast<int>(h.edge_count());
  const auto t_count = static_cast<int>(triangles.size());

  if (v_count == 4 && e_count == 6 && t_count == 4) return BlockClass{BlockKind::kK4, 4, std::nullopt};

  const int s = t_count;
  if (s >= 1 && v_count == s + 2 && e_count == 2 * s + 1) {
    // The base lies in every triangle, so it must be an edge of the first.
    for (const Edge& e : triangles.front().edges()) {
      const bool shared = std::all_of(triangles.begin(), triangles.end(), [&](const Triangle& t) {
        return (t.vertices() & (bit(e.u) | bit(e.v))) == (bit(e.u) | bit(e.v));
      });
      if (shared) return BlockClass{BlockKind::kBook, s, s == 1 ? std::nullopt : std::optional<Edge>(e)};
    }
  }
  return BlockClass{BlockKind::kOther, s, std::nullopt};
}

BlockDecomposition decompose(const Graph& g) {
  const auto triangles = enumerate_triangles(g);
  DisjointSets sets(triangles.size());

  std::vector<int> owner(static_cast<std::size_t>(kMaxVertices) * kMaxVertices, -1);
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (const Edge& e : triangles[i].edges()) {
      int& slot = owner[edge_slot(e)];
      if (slot < 0) {
        slot = static_cast<int>(i);
      } else {
        sets.unite(static_cast<std::size_t>(slot), i);
      }
    }
  }

  // Roots are the least triangle index in each class, so block order follows
  // the lexicographic order of each block's first triangle.
  BlockDecomposition out;
  std::vector<int> block_of(triangles.size(), -1);
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
    }
    TriangleBlock& b = out.blocks[static_cast<std::size_t>(block_of[root])];
    b.triangles.push_back(triangles[i]);
    b.vertices |= triangles[i].vertices();
    for (const Edge& e : triangles[i].edges()) b.edges.push_back(e);
  }
  for (TriangleBlock& b : out.blocks) {
    std::sort(b.edges.begin(), b.edges.end());
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
    b.classification = classify_block(b.edges);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const TriangleBlock& x, const TriangleBlock& y) { return x.edges.front() < y.edges.front(); });

  for (const Edge& e : g.edges()) {
    if (owner[edge_slot(e)] < 0) out.stray_edges.push_back(e);
  }
  return out;
}

Graph base_edge_reduction(const Graph& g) {
  if (auto k4 = find_k4(g)) {
    throw PreconditionError("graph contains a K4", *k4, std::nullopt);
  }
  if (auto w = contains_suspension_p4(g)) {
    throw PreconditionError("graph contains a P4-hat", std::nullopt, *w);
  }
  const BlockDecomposition dec = decompose(g);
  std::vector<Edge> removed = dec.stray_edges;
  for (const TriangleBlock& b : dec.blocks) {
    const BlockClass& c = b.classification;
    if (c.kind != BlockKind::kBook) {
      // Unreachable for P4-hat-free K4-free input: every block is a book.
      throw std::logic_error("non-book block " + describe(c) + " in a P4-hat-free K4-free graph");
    }
    removed.push_back(c.base ? *c.base : b.edges.front());
  }
  return g.without_edges(removed);
}

K4FreeBoundReport verify_k4free_bound(const Graph& g) {
  const Graph reduced = base_edge_reduction(g);
  K4FreeBoundReport r;
  r.n = g.order();
  r.triangles = count_triangles(g);
  r.reduced_edges = reduced.edge_count();
  const auto n = static_cast<std::size_t>(r.n);
  r.reduced_triangle_free = count_triangles(reduced) == 0;
  r.half_identity = 2 * r.triangles == r.reduced_edges;
  r.mantel = r.reduced_edges <= n * n / 4;
  r.bound = r.triangles <= n * n / 8;
  return r;
}

}  // namespace turan
