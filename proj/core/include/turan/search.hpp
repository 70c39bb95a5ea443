#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "turan/canon.hpp"
#include "turan/graph.hpp"

namespace turan {

/// The two triangles every search pins: 012 and 013.
std::vector<Triangle> pinned_triangles();

/// Triangles with an edge in {02, 03, 12, 13} and a vertex in {4..n-1}.
/// Each of them completes a P4-hat together with 012 and 013.
std::vector<Triangle> excluded_triangles(int n, std::span<const Triangle> fixed);

/// Every T whose union with the fixed triangles already contains a P4-hat,
/// found by running the detector. A superset of excluded_triangles.
std::vector<Triangle> forcing_triangles(int n, std::span<const Triangle> fixed);

/// All triangles on n vertices minus the fixed pair minus the excluded
/// pattern, in lexicographic order. Only fixed = {012, 013} is supported.
std::vector<Triangle> candidate_triangles(int n, std::span<const Triangle> fixed);

struct SearchSpec {
  int n = 0;
  int t = 0;
  std::vector<Triangle> fixed;
  std::vector<Triangle> candidates;

  int subset_size() const noexcept { return t - 2; }
};

SearchSpec make_search_spec(int n, int t);

struct ChunkProgress {
  std::uint64_t chunk = 0;
  std::uint64_t chunks = 0;
  std::uint64_t examined = 0;
};

/// Invoked once per finished chunk, serialized by the engine.
using ProgressHook = std::function<void(const ChunkProgress&)>;

struct SearchLimits {
  int max_n = 10;
  int max_oracle_n = 7;
  int max_extremal_n = 8;
  std::uint64_t max_subsets = 4'000'000'000;
};

struct SearchOptions {
  int workers = 1;
  /// Fixed rank partition; results do not depend on `workers`.
  std::uint64_t chunks = 256;
  /// Every union whose rank is a multiple of this is rebuilt from scratch
  /// and compared with the incremental one (0 disables).
  std::uint64_t verify_stride = 10'000;
  SearchLimits limits;
  ProgressHook progress;
};

enum class SearchOutcome { kExhausted, kCounterexampleFound };

struct SearchReport {
  int n = 0;
  int t = 0;
  SearchOutcome outcome = SearchOutcome::kExhausted;
  std::size_t candidate_count = 0;
  std::uint64_t subsets_total = 0;
  /// Subsets visited in rank order up to and including the counterexample,
  /// or all of them when exhausted.
  std::uint64_t graphs_examined = 0;
  /// P4-hat-free unions with more than t triangles among those visited.
  std::uint64_t unions_p4free_with_excess = 0;
  std::optional<Graph> counterexample;
  std::optional<std::uint64_t> counterexample_rank;
  std::vector<Triangle> counterexample_triangles;  // fixed + chosen, sorted
  /// Exhausted and t > floor(n^2/8): together with the all-Book(1) bound
  /// this proves ex(n, K3, P4-hat) < t.
  bool certifies_upper_bound = false;
  double elapsed_seconds = 0.0;
};

/// Walks every (t-2)-subset of the candidates in colex order and tests the
/// union with 012, 013 for a P4-hat. Stops at the lowest-ranked P4-hat-free
/// union. Requires 5 <= n <= limits.max_n, t >= 3, workers >= 1.
SearchReport counterexample_search(int n, int t, const SearchOptions& options = {});

struct ExtremalConfig {
  CanonicalForm form;
  Graph graph;  // decoded canonical representative
};

struct ExtremalResult {
  int n = 0;
  std::size_t ex_value = 0;
  std::vector<ExtremalConfig> configs;  // edge-minimal, sorted by form
  /// n >= 8 only: the search that certified ex_value + 1 is impossible.
  std::optional<SearchReport> upper_bound_search;
};

/// Enumerates all 2^C(n,2) labeled graphs. n <= limits.max_oracle_n.
ExtremalResult exhaustive_oracle(int n, const SearchLimits& limits = {});

/// ex(n, K3, P4-hat) with all extremal configurations, 4 <= n <= 8. Uses
/// the exhaustive oracle below 8 and the pinned-pair search at 8.
ExtremalResult extremal_value(int n, const SearchOptions& options = {});

/// Edge-minimal P4-hat-free graphs on n vertices made of exactly t pairwise
/// edge-disjoint triangles and no others, deduplicated and sorted. The
/// configurations not reachable by pinning two edge-sharing triangles.
std::vector<ExtremalConfig> triangle_packing_configs(int n, int t);

}  // namespace turan
