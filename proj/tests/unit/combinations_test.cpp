#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "turan/combinations.hpp"
#include "turan/error.hpp"

namespace turan {
namespace {

TEST(BinomialTest, Values) {
  EXPECT_EQ(binomial(38, 7), 12'620'256u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(5, 6), 0u);
  EXPECT_EQ(binomial(64, 32), 1'832'624'140'942'590'534u);
  try {
    binomial(70, 35);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
  EXPECT_THROW(binomial(-1, 0), Error);
}

TEST(ColexTest, Examples) {
  EXPECT_EQ(unrank_colex(0, 7), (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(unrank_colex(1, 3), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(unrank_colex(binomial(38, 7) - 1, 7), (std::vector<int>{31, 32, 33, 34, 35, 36, 37}));
  EXPECT_TRUE(unrank_colex(0, 0).empty());
}

TEST(ColexTest, RankRoundTrip) {
  for (int k = 1; k <= 7; ++k) {
    const std::uint64_t total = binomial(12, k);
    for (std::uint64_t r = 0; r < total; ++r) {
      const auto c = unrank_colex(r, k);
      ASSERT_EQ(rank_colex(c), r);
    }
  }
  std::mt19937_64 rng(0xc01);
  std::uniform_int_distribution<std::uint64_t> pick(0, binomial(38, 7) - 1);
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t r = pick(rng);
    ASSERT_EQ(rank_colex(unrank_colex(r, 7)), r);
  }
}

TEST(ColexTest, SuccessorMatchesRankOrder) {
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
    const std::uint64_t total = binomial(10, k);
    for (std::uint64_t r = 0; r + 1 < total; ++r) {
      const std::vector<int> before = combo;
      const int changed = next_colex(combo, 10);
      ASSERT_EQ(combo, unrank_colex(r + 1, k));
      ASSERT_GE(changed, 0);
      for (int i = changed + 1; i < k; ++i) ASSERT_EQ(combo[static_cast<std::size_t>(i)], before[static_cast<std::size_t>(i)]);
      ASSERT_NE(combo[static_cast<std::size_t>(changed)], before[static_cast<std::size_t>(changed)]);
    }
    const std::vector<int> last = combo;
    ASSERT_EQ(next_colex(combo, 10), -1);
    ASSERT_EQ(combo, last);
  }
}

TEST(RankRangeTest, Examples) {
  // C(5, 2) = 10 over 3 chunks.
  EXPECT_EQ(combination_rank_range(5, 2, 0, 3).size(), 3u);
  EXPECT_EQ(combination_rank_range(6, 1, 0, 3), (RankRange{0, 2}));
  EXPECT_EQ(combination_rank_range(6, 1, 1, 3), (RankRange{2, 4}));
  EXPECT_EQ(combination_rank_range(6, 1, 2, 3), (RankRange{4, 6}));
  EXPECT_THROW(combination_rank_range(6, 1, 3, 3), Error);
  EXPECT_THROW(combination_rank_range(6, 1, 0, 0), Error);
}

TEST(RankRangeTest, ChunksTileTheRanks) {
  for (const std::uint64_t chunks : {1u, 2u, 7u, 256u, 1000u}) {
    for (const auto& [total, k] : std::vector<std::pair<int, int>>{{38, 7}, {10, 3}, {5, 5}, {4, 2}}) {
      std::uint64_t next = 0;
      for (std::uint64_t c = 0; c < chunks; ++c) {
        const RankRange r = combination_rank_range(total, k, c, chunks);
        ASSERT_EQ(r.begin, next);
        ASSERT_LE(r.begin, r.end);
        next = r.end;
      }
      ASSERT_EQ(next, binomial(total, k));
    }
  }
}

}  // namespace
}  // namespace turan
