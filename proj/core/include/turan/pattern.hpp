#pragma once

#include <array>
#include <optional>
#include <span>

#include "turan/graph.hpp"

namespace turan {

/// Ordered path a-b-c-d (three edges, four distinct vertices).
using Path4 = std::array<int, 4>;

/// An apex adjacent to every vertex of a P4; together they span a P4-hat.
struct SuspensionWitness {
  int apex = 0;
  Path4 path{};

  friend auto operator<=>(const SuspensionWitness&, const SuspensionWitness&) = default;
};

/// Lexicographically least P4 (as a non-induced subgraph), if any.
std::optional<Path4> contains_path4(const Graph& g);

/// Lexicographically least (apex, path) pair witnessing a P4-hat, if any.
/// A P4-hat exists iff some neighborhood G[N(v)] contains a P4.
std::optional<SuspensionWitness> contains_suspension_p4(const Graph& g);

inline bool is_p4hat_free(const Graph& g) { return !contains_suspension_p4(g).has_value(); }

/// Checks all apex/4-tuple placements directly. Independent of the
/// neighborhood reduction above; meant as a test oracle for small n.
bool brute_force_suspension(const Graph& g);

/// Structural check of a witness against g.
bool is_valid_witness(const Graph& g, const SuspensionWitness& w);

namespace detail {

/// True iff the subgraph induced on `within` contains a P4. A graph is
/// P4-free iff some edge bc has private neighbors a != d on either side.
inline bool has_path4(std::span<const VertexSet> rows, VertexSet within) noexcept {
  VertexSet left = within;
  while (left != 0) {
    const int b = lowest(left);
    left &= left - 1;
    const VertexSet nb = rows[b] & within;
    if (popcount(nb) < 2) continue;
    // Only edges bc with c > b need checking; deg(c) >= 2 is implied below.
    VertexSet cs = nb & left;
    while (cs != 0) {
      const int c = lowest(cs);
      cs &= cs - 1;
      const VertexSet a_side = nb & ~bit(c);
      const VertexSet d_side = rows[c] & within & ~bit(b);
      if (d_side == 0) continue;
      if (a_side != d_side || popcount(a_side) > 1) return true;
    }
  }
  return false;
}

/// Hot-path P4-hat test over raw adjacency rows.
inline bool has_suspension_p4(std::span<const VertexSet> rows) noexcept {
  const int n = static_cast<int>(rows.size());
  for (int v = 0; v < n; ++v) {
    if (popcount(rows[v]) >= 4 && has_path4(rows, rows[v])) return true;
  }
  return false;
}

}  // namespace detail

}  // namespace turan
