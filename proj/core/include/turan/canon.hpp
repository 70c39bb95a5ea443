#pragma once

#include <cstdint>
#include <string>

#include "turan/graph.hpp"

namespace turan {

inline constexpr int kMaxCanonicalOrder = 12;

/// Canonical graph6 string: the least encoding over all relabelings that
/// respect a label-invariant vertex coloring. Equal forms <=> isomorphic.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonOptions {
  /// Search-tree nodes allowed before giving up with kResourceGuard.
  std::uint64_t node_budget = 50'000'000;
};

/// Requires n <= 12 (kSizeGuard otherwise).
CanonicalForm canonical_form(const Graph& g, const CanonOptions& options = {});

bool are_isomorphic(const Graph& g, const Graph& h, const CanonOptions& options = {});

}  // namespace turan
