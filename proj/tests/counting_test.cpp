#include <gtest/gtest.h>

#include <stdexcept>

#include "sortlab/counting.hpp"

namespace {

using sortlab::Counted;
using sortlab::Tally;

TEST(CountedCompare, OrdersAndCountsOnce) {
  Tally t;
  EXPECT_EQ(sortlab::counted_compare(1, 2, t), std::weak_ordering::less);
  EXPECT_EQ(t.comparisons, 1U);
  EXPECT_EQ(sortlab::counted_compare(2, 2, t), std::weak_ordering::equivalent);
  EXPECT_EQ(t.comparisons, 2U);
  EXPECT_EQ(sortlab::counted_compare(3, 1, t), std::weak_ordering::greater);
  EXPECT_EQ(t.comparisons, 3U);
}

TEST(Counted, LessAndSwapCounters) {
  Tally t;
  Counted<> cmp(t);
  int a = 5, b = 2;
  EXPECT_FALSE(cmp.less(a, b));
  EXPECT_TRUE(cmp.less(b, a));
  cmp.swap(a, b);
  cmp.add_swaps(4);
  EXPECT_EQ(a, 2);
  EXPECT_EQ(b, 5);
  EXPECT_EQ(t.comparisons, 2U);
  EXPECT_EQ(t.swaps, 5U);
}

TEST(Counted, ReversedFlipsOrderButSharesTally) {
  Tally t;
  Counted<> cmp(t);
  sortlab::Reversed<Counted<>> rev(cmp);
  EXPECT_TRUE(rev.less(3, 1));
  EXPECT_FALSE(rev.less(1, 3));
  EXPECT_EQ(t.comparisons, 2U);
}

TEST(Counted, CustomPredicate) {
  Tally t;
  Counted<std::greater<>> cmp(t);
  EXPECT_TRUE(cmp.less(3, 1));
  EXPECT_EQ(cmp.compare(1, 3), std::weak_ordering::greater);
  EXPECT_EQ(t.comparisons, 2U);
}

TEST(Kappa, Examples) {
  EXPECT_DOUBLE_EQ(sortlab::kappa(64, 16), 0.0);
  EXPECT_DOUBLE_EQ(sortlab::kappa(0, 1), 0.0);
  EXPECT_NEAR(sortlab::kappa(8950, 1024), (8950.0 - 10240.0) / 1024.0, 1e-12);
  EXPECT_NEAR(sortlab::kappa(8950, 1024), -1.2598, 1e-4);
}

TEST(Kappa, RejectsEmptyInput) { EXPECT_THROW(sortlab::kappa(0, 0), std::invalid_argument); }

TEST(SortStats, DerivesKappa) {
  const auto s = sortlab::make_stats(16, Tally{60, 3}, std::chrono::nanoseconds(10));
  EXPECT_EQ(s.comparisons, 60U);
  EXPECT_EQ(s.swaps, 3U);
  EXPECT_DOUBLE_EQ(s.kappa, -0.25);
  EXPECT_DOUBLE_EQ(sortlab::make_stats(0, Tally{}, {}).kappa, 0.0);
  EXPECT_DOUBLE_EQ(sortlab::make_stats(1, Tally{}, {}).kappa, 0.0);
}

}  // namespace
