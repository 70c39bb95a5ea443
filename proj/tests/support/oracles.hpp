#pragma once

// Independent reference implementations and generators for tests. Nothing
// here calls into the library code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan::testing {

inline std::size_t naive_triangle_count(const Graph& g) {
  std::size_t t = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++t;
  return t;
}

/// graph6 via an explicit '0'/'1' string, padded, then cut in sixes.
inline std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t p = 0; p < bits.size(); p += 6) {
    out += static_cast<char>(63 + std::stoi(bits.substr(p, 6), nullptr, 2));
  }
  return out;
}

/// Least upper-triangle bit string over all n! relabelings.
inline std::string brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && brute_canonical(g) == brute_canonical(h);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back(Edge{u, v});
  return Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Triangle-rich P4-hat-free graph: random triangles are glued on while the
/// result stays free, checked with the brute-force detector.
inline Graph random_free_triangle_union(int n, int attempts, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  Graph g = Graph::empty(n);
  for (int i = 0; i < attempts; ++i) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    const Graph next = g.with_edges({Edge::of(a, b), Edge::of(a, c), Edge::of(b, c)});
    if (!brute_force_suspension(next)) g = next;
  }
  return g;
}

/// Rejection-sampled P4-hat-free graph (uniform over G(n, p) conditioned on
/// being free) for small p, falling back to the triangle-union generator.
inline Graph random_free_graph(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pd(0.1, 0.45);
  for (int tries = 0; tries < 64; ++tries) {
    const Graph g = random_graph(n, pd(rng), rng);
    if (!brute_force_suspension(g)) return g;
  }
  return random_free_triangle_union(n, 3 * n, rng);
}

}  // namespace turan::testing
