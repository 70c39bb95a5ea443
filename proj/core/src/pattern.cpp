#include "turan/pattern.hpp"

namespace turan {

namespace {

// First path in lexicographic order among vertices of `within`.
std::optional<Path4> least_path4(const Graph& g, VertexSet within) {
  VertexSet as = within;
  while (as != 0) {
    const int a = lowest(as);
    as &= as - 1;
    VertexSet bs = g.neighbors(a) & within;
    while (bs != 0) {
      const int b = lowest(bs);
      bs &= bs - 1;
      VertexSet cs = g.neighbors(b) & within & ~bit(a);
      while (cs != 0) {
        const int c = lowest(cs);
        cs &= cs - 1;
        const VertexSet ds = g.neighbors(c) & within & ~bit(a) & ~bit(b);
        if (ds != 0) return Path4{a, b, c, lowest(ds)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Path4> contains_path4(const Graph& g) { return least_path4(g, g.vertices()); }

std::optional<SuspensionWitness> contains_suspension_p4(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nv = g.neighbors(v);
    if (popcount(nv) < 4 || !detail::has_path4(g.rows(), nv)) continue;
    if (auto path = least_path4(g, nv)) return SuspensionWitness{v, *path};
  }
  return std::nullopt;
}

bool brute_force_suspension(const Graph& g) {
  const int n = g.order();
  for (int apex = 0; apex < n; ++apex) {
    for (int a = 0; a < n; ++a) {
      if (a == apex || !g.adjacent(apex, a)) continue;
      for (int b = 0; b < n; ++b) {
        if (b == apex || b == a || !g.adjacent(apex, b) || !g.adjacent(a, b)) continue;
        for (int c = 0; c < n; ++c) {
          if (c == apex || c == a || c == b) continue;
          if (!g.adjacent(apex, c) || !g.adjacent(b, c)) continue;
          for (int d = 0; d < n; ++d) {
            if (d == apex || d == a || d == b || d == c) continue;
            if (g.adjacent(apex, d) && g.adjacent(c, d)) return true;
          }
        }
      }
    }
  }
  return false;
}

bool is_valid_witness(const Graph& g, const SuspensionWitness& w) {
  const int n = g.order();
  const std::array<int, 5> vs{w.apex, w.path[0], w.path[1], w.path[2], w.path[3]};
  VertexSet seen = 0;
  for (int v : vs) {
    if (v < 0 || v >= n) return false;
    seen |= bit(v);
  }
  if (popcount(seen) != 5) return false;
  for (int p : w.path) {
    if (!g.adjacent(w.apex, p)) return false;
  }
  return g.adjacent(w.path[0], w.path[1]) && g.adjacent(w.path[1], w.path[2]) &&
         g.adjacent(w.path[2], w.path[3]);
}

}  // namespace turan
