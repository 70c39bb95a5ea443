#include "turan/wide_graph.hpp"

#include <string>

#include "turan/error.hpp"

namespace turan {

namespace {

using Words = std::vector<std::uint64_t>;

int first_set(const Words& w, std::size_t from_bit = 0) {
  for (std::size_t i = from_bit / 64; i < w.size(); ++i) {
    std::uint64_t word = w[i];
    if (i == from_bit / 64) word &= ~std::uint64_t{0} << (from_bit % 64);
    if (word != 0) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
  }
  return -1;
}

int count(const Words& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

Words masked(const WideGraph& g, int v, const Words& within) {
  Words out(within.size());
  const std::uint64_t* r = g.row(v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r[i] & within[i];
  return out;
}

void clear(Words& w, int v) { w[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }

// Least path a-b-c-d inside `within`, in lexicographic order.
std::optional<Path4> least_path4(const WideGraph& g, const Words& within) {
  for (int a = first_set(within); a >= 0; a = first_set(within, static_cast<std::size_t>(a) + 1)) {
    const Words bs = masked(g, a, within);
    for (int b = first_set(bs); b >= 0; b = first_set(bs, static_cast<std::size_t>(b) + 1)) {
      Words cs = masked(g, b, within);
      clear(cs, a);
      for (int c = first_set(cs); c >= 0; c = first_set(cs, static_cast<std::size_t>(c) + 1)) {
        Words ds = masked(g, c, within);
        clear(ds, a);
        clear(ds, b);
        if (const int d = first_set(ds); d >= 0) return Path4{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

bool has_path4(const WideGraph& g, const Words& within) {
  for (int b = first_set(within); b >= 0; b = first_set(within, static_cast<std::size_t>(b) + 1)) {
    const Words nb = masked(g, b, within);
    if (count(nb) < 2) continue;
    for (int c = first_set(nb, static_cast<std::size_t>(b) + 1); c >= 0;
         c = first_set(nb, static_cast<std::size_t>(c) + 1)) {
      Words a_side = nb;
      clear(a_side, c);
      Words d_side = masked(g, c, within);
      clear(d_side, b);
      const int d_count = count(d_side);
      if (d_count == 0) continue;
      if (a_side != d_side || d_count > 1) return true;
    }
  }
  return false;
}

}  // namespace

WideGraph WideGraph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw Error(ErrorCode::kVertexCountOutOfRange, "vertex count must be positive");
  WideGraph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(g.words_), 0);
  auto set = [&](int u, int v) {
    g.bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(g.words_) + static_cast<std::size_t>(v) / 64] |=
        std::uint64_t{1} << (v % 64);
  };
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "edge endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(e.u));
    set(e.u, e.v);
    set(e.v, e.u);
  }
  return g;
}

WideGraph WideGraph::from_graph(const Graph& g) { return from_edges(g.order(), g.edges()); }

std::size_t WideGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::size_t count_triangles(const WideGraph& g) {
  std::size_t total = 0;
  const auto words = static_cast<std::size_t>(g.words());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      // Common neighbours w > v.
      const std::uint64_t* ru = g.row(u);
      const std::uint64_t* rv = g.row(v);
      for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t common = ru[i] & rv[i];
        const std::size_t lo = i * 64;
        if (lo + 63 <= static_cast<std::size_t>(v)) continue;
        if (lo <= static_cast<std::size_t>(v)) common &= ~std::uint64_t{0} << (static_cast<std::size_t>(v) - lo) << 1;
        total += static_cast<std::size_t>(std::popcount(common));
      }
    }
  }
  return total;
}

std::optional<SuspensionWitness> contains_suspension_p4(const WideGraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const Words nv(g.row(v), g.row(v) + g.words());
    if (count(nv) < 4 || !has_path4(g, nv)) continue;
    if (auto path = least_path4(g, nv)) return SuspensionWitness{v, *path};
  }
  return std::nullopt;
}

}  // namespace turan
