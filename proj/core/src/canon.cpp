#include "turan/canon.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "turan/error.hpp"
#include "turan/graph6.hpp"

namespace turan {

namespace {

// Colour refinement started from degrees. Colours are ranks of sorted
// signatures, so they depend only on the isomorphism type.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for_each_vertex(g.neighbors(v), [&](int u) { around.push_back(color[u]); });
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

class CanonSearch {
 public:
  CanonSearch(const Graph& g, const CanonOptions& options)
      : g_(g), n_(g.order()), budget_(options.node_budget) {
    const auto color = refined_colors(g);
    slot_color_ = color;
    std::sort(slot_color_.begin(), slot_color_.end());
    for (int v = 0; v < n_; ++v) members_[color[v]] |= bit(v);
    for (int u = 0; u < n_; ++u) {
      for (int w = u + 1; w < n_; ++w) {
        const VertexSet mu = g.neighbors(u) & ~bit(w);
        const VertexSet mw = g.neighbors(w) & ~bit(u);
        if (mu == mw) twins_[u] |= bit(w), twins_[w] |= bit(u);
      }
    }
  }

  std::vector<int> run() {
    best_bits_.assign(bit_count(), 2);  // 2 > any bit: first leaf always wins
    current_bits_.assign(bit_count(), 0);
    placed_.assign(static_cast<std::size_t>(n_), -1);
    descend(0, 0);
    return best_order_;
  }

 private:
  std::size_t bit_count() const { return static_cast<std::size_t>(n_) * (n_ - 1) / 2; }
  static std::size_t column_start(int j) { return static_cast<std::size_t>(j) * (j - 1) / 2; }

  void descend(int pos, VertexSet used) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kResourceGuard, "canonical labeling exceeded its node budget");
    }
    if (pos == n_) {
      if (best_order_.empty() || current_bits_ < best_bits_) {
        best_bits_ = current_bits_;
        best_order_ = placed_;
      }
      return;
    }
    VertexSet candidates = members_[slot_color_[pos]] & ~used;
    VertexSet tried = 0;
    const std::size_t base = column_start(pos);
    while (candidates != 0) {
      const int v = lowest(candidates);
      candidates &= candidates - 1;
      // Swapping two unplaced twins is an automorphism fixing the prefix.
      if (twins_[v] & tried) continue;
      tried |= bit(v);

      for (int i = 0; i < pos; ++i) {
        current_bits_[base + i] = static_cast<unsigned char>(g_.adjacent(placed_[i], v) ? 1 : 0);
      }
      const auto end = static_cast<std::ptrdiff_t>(base + pos);
      if (std::lexicographical_compare(best_bits_.begin(), best_bits_.begin() + end,
                                       current_bits_.begin(), current_bits_.begin() + end)) {
        continue;  // prefix already worse than the best leaf
      }
      placed_[pos] = v;
      descend(pos + 1, used | bit(v));
      placed_[pos] = -1;
    }
  }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> slot_color_;
  std::array<VertexSet, kMaxVertices> members_{};
  std::array<VertexSet, kMaxVertices> twins_{};
  std::vector<unsigned char> best_bits_;
  std::vector<unsigned char> current_bits_;
  std::vector<int> placed_;
  std::vector<int> best_order_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const CanonOptions& options) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kSizeGuard, "canonical labeling supports at most 12 vertices");
  }
  if (g.order() == 0) throw Error(ErrorCode::kVertexCountOutOfRange, "null graph has no graph6 form");
  const std::vector<int> order = CanonSearch(g, options).run();
  std::vector<int> perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = static_cast<int>(pos);
  return CanonicalForm{encode_graph6(g.relabeled(perm))};
}

bool are_isomorphic(const Graph& g, const Graph& h, const CanonOptions& options) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
    if (g.order() > kMaxCanonicalOrder || h.order() > kMaxCanonicalOrder) {
      throw Error(ErrorCode::kSizeGuard, "canonical labeling supports at most 12 vertices");
    }
    return false;
  }
  return canonical_form(g, options) == canonical_form(h, options);
}

}  // namespace turan
