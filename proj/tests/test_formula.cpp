#include <gtest/gtest.h>

#include "htp/error.hpp"
#include "htp/formula.hpp"
#include "oracles.hpp"

using namespace htp;

TEST(Threshold, Examples) {
  EXPECT_EQ(threshold(2), 1);
  EXPECT_EQ(threshold(3), 2);
  EXPECT_EQ(threshold(5), 3);
  EXPECT_EQ(threshold(7), 3);
  EXPECT_EQ(threshold(8), 4);
  EXPECT_EQ(threshold(11), 4);
  EXPECT_EQ(threshold(12), 5);
}

TEST(Threshold, AgreesWithScan) {
  for (std::int64_t r = 2; r <= 20000; ++r) ASSERT_EQ(threshold(r), oracle::scan_threshold(r)) << r;
}

TEST(Threshold, ExactAtLargeBoundaries) {
  for (std::int64_t t : {1000LL, 65536LL, 3037000LL, 1LL << 30}) {
    const auto range = color_range(t);
    EXPECT_EQ(threshold(range.min), t);
    EXPECT_EQ(threshold(range.max), t);
    EXPECT_EQ(threshold(range.min - 1), t - 1);
    EXPECT_EQ(threshold(range.max + 1), t + 1);
  }
}

TEST(Threshold, RejectsSmallR) {
  EXPECT_THROW(threshold(1), Error);
  EXPECT_THROW(threshold(0), Error);
}

TEST(ColorRange, Examples) {
  EXPECT_EQ(color_range(1).min, 2);
  EXPECT_EQ(color_range(1).max, 2);
  EXPECT_EQ(color_range(3).min, 5);
  EXPECT_EQ(color_range(3).max, 7);
  EXPECT_EQ(color_range(5).min, 12);
  EXPECT_EQ(color_range(5).max, 16);
  EXPECT_THROW(color_range(0), Error);
}

TEST(ColorRange, TilesWithoutGaps) {
  std::int64_t next = 2;
  for (std::int64_t t = 1; t <= 100; ++t) {
    const auto range = color_range(t);
    EXPECT_EQ(range.min, next);
    EXPECT_LE(range.min, range.max);
    EXPECT_EQ(threshold(range.min), t);
    EXPECT_EQ(threshold(range.max), t);
    next = range.max + 1;
  }
}

TEST(PartitionNumber, Examples) {
  EXPECT_EQ(partition_number(7, 1).value, 4);
  EXPECT_FALSE(partition_number(7, 1).t.has_value());
  EXPECT_EQ(partition_number(6, 5).value, 2);
  EXPECT_EQ(partition_number(6, 5).t, 3);
  EXPECT_EQ(partition_number(3, 3).value, 1);
  EXPECT_EQ(partition_number(1, 0).value, 1);
}

TEST(PartitionNumber, Rejections) {
  EXPECT_THROW(partition_number(3, 4), Error);
  EXPECT_THROW(partition_number(0, 0), Error);
  EXPECT_THROW(partition_number(3, 0), Error);
  EXPECT_THROW(partition_number(3, -1), Error);
}

TEST(PartitionNumber, RainbowIsOne) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    EXPECT_EQ(partition_number(n, choose2(n)).value, 1) << n;
    if (n >= 3) EXPECT_EQ(partition_number(n, choose2(n)).t, n - 1);
  }
}

TEST(PartitionNumber, NonincreasingInR) {
  for (std::int64_t n = 2; n <= 40; ++n) {
    std::int64_t prev = partition_number(n, 1).value;
    for (std::int64_t r = 1; r <= choose2(n); ++r) {
      const auto v = partition_number(n, r).value;
      EXPECT_LE(v, prev);
      EXPECT_EQ(v, oracle::closed_form(n, r));
      prev = v;
    }
  }
}
