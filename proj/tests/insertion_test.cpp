#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "sortlab/harness.hpp"
#include "sortlab/insertion.hpp"
#include "sortlab/random.hpp"

namespace {

using sortlab::Counted;
using sortlab::InsertionWindow;
using sortlab::Tally;

std::uint64_t ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

TEST(BinaryInsert, EveryPositionInEveryWindowUpTo64) {
  for (std::size_t d = 0; d <= 64; ++d) {
    for (std::size_t slot = 0; slot <= d; ++slot) {
      // run holds even keys 0, 2, ..., key 2 * slot - 1 belongs at `slot`
      std::vector<int> data(d + 1);
      for (std::size_t i = 0; i < d; ++i) data[i] = static_cast<int>(2 * i);
      data[d] = static_cast<int>(2 * slot) - 1;
      std::vector<std::size_t> order(d + 1);
      std::iota(order.begin(), order.end(), std::size_t{0});
      Tally t;
      Counted<> cmp(t);
      const std::size_t pos =
          sortlab::binary_insert(std::span<const int>(data), std::span<std::size_t>(order), {0, d, d}, cmp);
      ASSERT_EQ(pos, slot);
      ASSERT_EQ(order[slot], d);
      const std::uint64_t lg = ceil_log2(d + 1);
      ASSERT_TRUE(t.comparisons == lg || t.comparisons + 1 == lg) << "d=" << d << " slot=" << slot;
      for (std::size_t i = 0; i + 1 < order.size(); ++i) ASSERT_LE(data[order[i]], data[order[i + 1]]);
    }
  }
}

TEST(BinaryInsert, TargetBehindTheWindowIsRotatedIn) {
  std::vector<int> data{10, 20, 30, 99, 98, 15};
  std::vector<std::size_t> order{0, 1, 2, 3, 4, 5};
  Tally t;
  Counted<> cmp(t);
  const std::size_t pos = sortlab::binary_insert(std::span<const int>(data), std::span<std::size_t>(order), {0, 3, 5}, cmp);
  EXPECT_EQ(pos, 1U);
  EXPECT_EQ(order, (std::vector<std::size_t>{0, 5, 1, 2, 3, 4}));
  EXPECT_EQ(data, (std::vector<int>{10, 20, 30, 99, 98, 15}));
}

TEST(BinaryInsert, WindowWithOffset) {
  std::vector<int> data{50, 1, 3, 5, 4};
  std::vector<std::size_t> order{0, 1, 2, 3, 4};
  Tally t;
  Counted<> cmp(t);
  EXPECT_EQ(sortlab::binary_insert(std::span<const int>(data), std::span<std::size_t>(order), {1, 3, 4}, cmp), 3U);
  EXPECT_EQ(order, (std::vector<std::size_t>{0, 1, 2, 4, 3}));
}

TEST(BinaryInsert, EqualKeyLandsBeforeItsEquals) {
  std::vector<int> data{1, 2, 2, 2, 3, 2};
  std::vector<std::size_t> order{0, 1, 2, 3, 4, 5};
  Tally t;
  Counted<> cmp(t);
  EXPECT_EQ(sortlab::binary_insert(std::span<const int>(data), std::span<std::size_t>(order), {0, 5, 5}, cmp), 1U);
}

TEST(BinaryInsert, RejectsTargetInsideWindow) {
  std::vector<int> data{1, 2, 3};
  std::vector<std::size_t> order{0, 1, 2};
  Tally t;
  Counted<> cmp(t);
  EXPECT_THROW(sortlab::binary_insert(std::span<const int>(data), std::span<std::size_t>(order), {0, 2, 1}, cmp),
               std::invalid_argument);
  EXPECT_THROW(sortlab::binary_insert(std::span<const int>(data), std::span<std::size_t>(order), {0, 2, 3}, cmp),
               std::invalid_argument);
}

TEST(Insertionsort, MatchesOracleOnEveryPermutationUpToSeven) {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<int> v = p;
      Tally t;
      Counted<> cmp(t);
      sortlab::insertion_sort(std::span<int>(v), cmp);
      ASSERT_TRUE(std::is_sorted(v.begin(), v.end()));
      ASSERT_EQ(t.comparisons, oracle::insertionsort_count(p));
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(Insertionsort, ExhaustiveMeans) {
  auto mean_times = [](std::size_t n, std::uint64_t denominator) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t sum = 0, count = 0;
    do {
      std::vector<int> v = p;
      Tally t;
      Counted<> cmp(t);
      sortlab::insertion_sort(std::span<int>(v), cmp);
      sum += t.comparisons;
      ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::pair{sum * denominator, count};
  };
  const auto [s4, c4] = mean_times(4, 3);
  EXPECT_EQ(s4, c4 * 14);
  const auto [s8, c8] = mean_times(8, 105);
  EXPECT_EQ(s8, c8 * 1637);
}

TEST(Insertionsort, ClosedFormAverageMatchesEnumeration) {
  // mean over insertion slots computed by running the search for each slot
  for (std::size_t n = 1; n <= 300; ++n) {
    double expected = 0;
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<int> run(k);
      for (std::size_t i = 0; i < k; ++i) run[i] = static_cast<int>(2 * i);
      std::uint64_t total = 0;
      for (std::size_t slot = 0; slot <= k; ++slot) {
        oracle::Counter c;
        oracle::search(run, k, static_cast<int>(2 * slot) - 1, c);
        total += c.n;
      }
      expected += static_cast<double>(total) / static_cast<double>(k + 1);
    }
    ASSERT_NEAR(sortlab::insertionsort_average(n), expected, 1e-9 * (1 + expected)) << "n=" << n;
  }
}

TEST(Insertionsort, SortsDuplicates) {
  struct Item {
    int key;
    int tag;
  };
  std::vector<Item> v;
  sortlab::SplitMix64 rng(9);
  for (int i = 0; i < 200; ++i) v.push_back({static_cast<int>(sortlab::uniform_below(rng, 4)), i});
  Tally t;
  auto by_key = [](const Item& a, const Item& b) { return a.key < b.key; };
  Counted<decltype(by_key)> cmp(t, by_key);
  sortlab::insertion_sort(std::span<Item>(v), cmp);
  for (std::size_t i = 1; i < v.size(); ++i) ASSERT_LE(v[i - 1].key, v[i].key);
}

}  // namespace
