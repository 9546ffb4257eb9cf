#include "fecount/big_count.hpp"

#include <gtest/gtest.h>

namespace fecount {
namespace {

TEST(BigCount, FiniteArithmeticIsExact) {
  const BigCount two(2);
  EXPECT_EQ(two.pow(100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ((BigCount(7) + BigCount(5)) * BigCount(3), BigCount(36));
  EXPECT_EQ(BigCount(9).pow(0), BigCount(1));
  EXPECT_TRUE(BigCount().is_zero());
}

TEST(BigCount, InfiniteAbsorbs) {
  const auto inf = BigCount::infinite();
  EXPECT_TRUE((inf + BigCount(1)).is_infinite());
  EXPECT_TRUE((BigCount(0) * inf).is_infinite());
  EXPECT_TRUE(inf.pow(3).is_infinite());
  EXPECT_EQ(inf.to_string(), "infinite");
  EXPECT_THROW(inf.value(), std::logic_error);
}

TEST(BigCount, Ordering) {
  EXPECT_LT(BigCount(3), BigCount(4));
  EXPECT_LT(BigCount(2).pow(200), BigCount::infinite());
  EXPECT_EQ(BigCount::infinite(), BigCount::infinite());
  EXPECT_NE(BigCount::infinite(), BigCount(0));
}

TEST(BigCount, RejectsNegative) { EXPECT_THROW(BigCount(Integer(-1)), std::invalid_argument); }

}  // namespace
}  // namespace fecount
