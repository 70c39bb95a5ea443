#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace turan {

/// C(n, k) with overflow detection (kOverflow). C(n, k) = 0 for k > n.
std::uint64_t binomial(int n, int k);

/// k-subset of {0, 1, ...} at colexicographic rank `rank`, ascending.
std::vector<int> unrank_colex(std::uint64_t rank, int k);

/// Inverse of unrank_colex; `combo` must be strictly increasing.
std::uint64_t rank_colex(std::span<const int> combo);

/// Advances an ascending k-subset of {0..universe-1} to its colex successor.
/// Returns the highest position that changed (positions 0..result were
/// rewritten), or -1 when `combo` was the last subset (left unchanged).
int next_colex(std::span<int> combo, int universe) noexcept;

/// Half-open rank interval [begin, end).
struct RankRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const noexcept { return end - begin; }
  friend bool operator==(const RankRange&, const RankRange&) = default;
};

/// Chunk `chunk` of `chunks` equal splits of the C(total, k) colex ranks.
/// The split depends only on (total, k, chunks), never on worker count.
RankRange combination_rank_range(int total, int k, std::uint64_t chunk, std::uint64_t chunks);

}  // namespace turan
