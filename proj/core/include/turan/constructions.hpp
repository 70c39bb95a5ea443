#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Complete bipartite graph with a perfect matching inside one even part.
///
/// Parts are {0..p-1} and {p..n-1} with p = floor(n/2), except for
/// n = 2 (mod 4) where both halves would be odd and p = n/2 - 1 is used so
/// that both parts are even. The matching goes in the first even part and
/// pairs consecutive labels. Has exactly floor(n^2/8) triangles.
Graph bipartite_matching(int n);  // 4 <= n <= 64

/// Edge list of the same graph for any n >= 4 (see WideGraph).
std::vector<Edge> bipartite_matching_edges(int n);

/// Small extremal graphs for n = 4..7: K4; K4 + isolated vertex; K4 with a
/// triangle hung on vertex 0; two K4s sharing vertex 0.
Graph small_extremal(int n);

/// 16 vertices, 48 edges, 32 triangles, all triangle blocks K4.
/// Labels: u_i = i, b_i = 4 + i, o_i = 8 + i, r_i = 12 + i (i = 0..3).
Graph sixteen_vertex();

/// B_s: base 01, pages 2..s+1. s >= 1.
Graph book(int s);

/// K_k, 1 <= k <= 64.
Graph complete(int k);

enum class Family { kSmallExtremal, kBipartiteMatching, kSixteenVertex, kBook, kComplete };

struct ConstructionFamily {
  Family family;
  std::string name;              // CLI spelling
  bool p4hat_free;               // whether members must pass the detector
};

const std::vector<ConstructionFamily>& construction_families();

/// Looks up a family by CLI name ("small", "bipartite", "sixteen", "book",
/// "complete"); throws kInvalidArgument otherwise.
const ConstructionFamily& family_by_name(const std::string& name);

/// Builds the member with parameter `param` (n, s or k; ignored for sixteen).
Graph build(Family family, int param);

/// Triangle count the family guarantees for `param`.
std::size_t expected_triangles(Family family, int param);

}  // namespace turan
