#include "turan/combinations.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "turan/error.hpp"

namespace turan {

namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) throw Error(ErrorCode::kInvalidArgument, "binomial of negative arguments");
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide acc = 1;
  for (int i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::kOverflow,
                  "C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<int> unrank_colex(std::uint64_t rank, int k) {
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = k; i >= 1; --i) {
    // Largest c with C(c, i) <= rank; c >= i - 1 since C(i-1, i) = 0.
    int c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    combo[static_cast<std::size_t>(i - 1)] = c;
    rank -= binomial(c, i);
  }
  return combo;
}

std::uint64_t rank_colex(std::span<const int> combo) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < combo.size(); ++i) {
    if (i > 0 && combo[i] <= combo[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "combination must be strictly increasing");
    }
    rank += binomial(combo[i], static_cast<int>(i) + 1);
  }
  return rank;
}

int next_colex(std::span<int> combo, int universe) noexcept {
  const int k = static_cast<int>(combo.size());
  for (int i = 0; i < k; ++i) {
    const int limit = i + 1 < k ? combo[static_cast<std::size_t>(i) + 1] : universe;
    if (combo[static_cast<std::size_t>(i)] + 1 < limit) {
      ++combo[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) combo[static_cast<std::size_t>(j)] = j;
      return i;
    }
  }
  return -1;
}

RankRange combination_rank_range(int total, int k, std::uint64_t chunk, std::uint64_t chunks) {
  if (chunks == 0 || chunk >= chunks) {
    throw Error(ErrorCode::kInvalidArgument, "chunk index outside chunk count");
  }
  const Wide ranks = binomial(total, k);
  const auto begin = static_cast<std::uint64_t>(ranks * chunk / chunks);
  const auto end = static_cast<std::uint64_t>(ranks * (chunk + 1) / chunks);
  return RankRange{begin, end};
}

}  // namespace turan
