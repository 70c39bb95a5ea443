#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

/// Multi-word adjacency for graphs beyond the 64-vertex Graph capacity.
/// Only used to certify large construction members; the search works on
/// Graph exclusively.
class WideGraph {
 public:
  static WideGraph from_edges(int n, const std::vector<Edge>& edges);
  static WideGraph from_graph(const Graph& g);

  int order() const noexcept { return n_; }
  int words() const noexcept { return words_; }
  std::size_t edge_count() const noexcept;
  bool adjacent(int u, int v) const noexcept {
    return (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }
  const std::uint64_t* row(int v) const noexcept {
    return bits_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

std::size_t count_triangles(const WideGraph& g);

/// Same contract as the Graph overload: least (apex, path) witness.
std::optional<SuspensionWitness> contains_suspension_p4(const WideGraph& g);

}  // namespace turan
