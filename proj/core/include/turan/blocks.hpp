#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/error.hpp"
#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

enum class BlockKind { kK4, kBook, kOther };

/// Structural class of a triangle block. `pages` is s for Book(s), and the
/// block's triangle count otherwise.
struct BlockClass {
  BlockKind kind = BlockKind::kOther;
  int pages = 0;
  std::optional<Edge> base;  // Book(s): the edge shared by all s triangles

  friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

std::string describe(const BlockClass& c);

struct TriangleBlock {
  std::vector<Edge> edges;          // sorted
  std::vector<Triangle> triangles;  // sorted
  VertexSet vertices = 0;
  BlockClass classification;
};

struct BlockDecomposition {
  std::vector<TriangleBlock> blocks;  // ordered by least edge
  std::vector<Edge> stray_edges;      // edges in no triangle, sorted
};

/// Splits the triangle-carrying edges into triangle blocks: classes of the
/// "shares an edge" relation on triangles, closed transitively.
BlockDecomposition decompose(const Graph& g);

/// Classifies a triangle-connected edge set as K4, Book(s) or Other. The
/// triangles considered are those formed by the given edges alone.
BlockClass classify_block(const std::vector<Edge>& edges);

/// Thrown when an operation requiring a P4-hat-free, K4-free graph gets one
/// that is not; carries whichever obstruction was found first.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::optional<std::array<int, 4>> k4,
                    std::optional<SuspensionWitness> witness)
      : Error(ErrorCode::kPreconditionViolated, what), k4_(k4), witness_(witness) {}

  const std::optional<std::array<int, 4>>& k4() const noexcept { return k4_; }
  const std::optional<SuspensionWitness>& witness() const noexcept { return witness_; }

 private:
  std::optional<std::array<int, 4>> k4_;
  std::optional<SuspensionWitness> witness_;
};

/// Deletes one edge per book block: the base for s >= 2, the
/// lexicographically least edge for s = 1. Stray edges are dropped as well,
/// so the result is triangle-free with exactly 2 t(G) edges.
/// Requires G to be P4-hat-free and K4-free.
Graph base_edge_reduction(const Graph& g);

struct K4FreeBoundReport {
  int n = 0;
  std::size_t triangles = 0;        // t(G)
  std::size_t reduced_edges = 0;    // e(G')
  bool reduced_triangle_free = false;
  bool half_identity = false;       // t(G) == e(G') / 2
  bool mantel = false;              // e(G') <= floor(n^2/4)
  bool bound = false;               // t(G) <= floor(n^2/8)

  bool holds() const noexcept { return reduced_triangle_free && half_identity && mantel && bound; }
};

/// Runs base_edge_reduction and checks the counting chain
/// t(G) = e(G')/2 <= floor(n^2/4)/2 = floor(n^2/8).
K4FreeBoundReport verify_k4free_bound(const Graph& g);

}  // namespace turan
