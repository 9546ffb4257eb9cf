#include "fecount/partition.hpp"

#include <gtest/gtest.h>

#include <set>

#include "fecount/errors.hpp"
#include "oracles.hpp"

namespace fecount {
namespace {

std::vector<std::vector<std::uint32_t>> all_parts(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts());
  return out;
}

TEST(CountPartitions, SmallValues) {
  EXPECT_EQ(count_partitions(0), BigCount(1));
  EXPECT_EQ(count_partitions(1), BigCount(1));
  EXPECT_EQ(count_partitions(6), BigCount(11));
}

TEST(CountPartitions, KnownLargeValues) {
  // A000041.
  EXPECT_EQ(count_partitions(100).to_string(), "190569292");
  EXPECT_EQ(count_partitions(200).to_string(), "3972999029388");
  EXPECT_EQ(count_partitions(1000).to_string(), "24061467864032622473692149727991");
}

TEST(CountPartitions, AgreesWithPentagonalRecurrence) {
  const auto expected = testing::pentagonal_partition_counts(2000);
  const auto got = partition_counts_upto(2000);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t n = 0; n <= 2000; ++n) ASSERT_EQ(got[n], expected[n]) << "n=" << n;
}

TEST(CountPartitions, Monotone) {
  const auto p = partition_counts_upto(201);
  for (std::size_t n = 0; n < 201; ++n) EXPECT_GE(p[n + 1], p[n]);
}

TEST(CountPartitions, CeilingIsEnforced) {
  EXPECT_THROW(count_partitions(10'001), ResourceError);
  ResourceLimits tight;
  tight.max_n = 50;
  EXPECT_THROW(count_partitions(51, tight), ResourceError);
  EXPECT_NO_THROW(count_partitions(50, tight));
}

TEST(EnumeratePartitions, CanonicalOrder) {
  using V = std::vector<std::vector<std::uint32_t>>;
  EXPECT_EQ(all_parts(0), V{{}});
  EXPECT_EQ(all_parts(2), (V{{2}, {1, 1}}));
  EXPECT_EQ(all_parts(4), (V{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(EnumeratePartitions, ReverseLexicographicAndDistinct) {
  for (std::uint32_t n = 1; n <= 25; ++n) {
    const auto parts = all_parts(n);
    for (std::size_t i = 1; i < parts.size(); ++i)
      ASSERT_TRUE(parts[i - 1] > parts[i]) << "n=" << n << " at " << i;
  }
}

TEST(EnumeratePartitions, MultiplicityForm) {
  auto s = enumerate_partitions(2);
  auto first = s.next();
  auto second = s.next();
  ASSERT_TRUE(first && second);
  EXPECT_EQ(first->multiplicities(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(second->multiplicities(), (std::vector<std::uint32_t>{2, 0}));
  EXPECT_FALSE(s.next());
}

TEST(EnumeratePartitions, LengthMatchesCount) {
  for (std::uint32_t n = 0; n <= 60; ++n) {
    PartitionStream s(n);
    std::uint64_t len = 0;
    while (s.advance()) ++len;
    ASSERT_EQ(BigCount(len), count_partitions(n)) << "n=" << n;
  }
}

TEST(EnumeratePartitions, EveryPartitionSolvesTheRankEquation) {
  for (std::uint32_t n = 0; n <= 40; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      std::uint64_t total = 0;
      for (std::uint32_t i = 1; i <= p.n(); ++i) total += i * std::uint64_t{p.multiplicity(i)};
      ASSERT_EQ(total, n);
    }
  }
}

TEST(EnumeratePartitions, MatchesRecursiveEnumeration) {
  for (std::uint32_t n = 0; n <= 18; ++n) {
    std::set<std::vector<std::uint32_t>> expected, got;
    testing::for_each_multiplicity_vector(n, [&](const auto& z) { expected.insert(z); });
    for (const auto& p : enumerate_partitions(n)) got.insert(p.multiplicities());
    ASSERT_EQ(got, expected) << "n=" << n;
  }
}

TEST(Partition, DistinctSizes) {
  EXPECT_EQ(distinct_sizes(Partition()), 0U);
  const std::uint32_t a[] = {4, 1, 1};
  EXPECT_EQ(distinct_sizes(Partition::from_parts(a)), 2U);
  const std::uint32_t b[] = {3, 2, 1};
  EXPECT_EQ(distinct_sizes(Partition::from_parts(b)), 3U);
}

TEST(Partition, Conversions) {
  const std::uint32_t raw[] = {1, 4, 1};
  const auto p = Partition::from_parts(raw);
  EXPECT_EQ(p.n(), 6U);
  EXPECT_EQ(p.parts(), (std::vector<std::uint32_t>{4, 1, 1}));
  EXPECT_EQ(p.sizes(), (std::vector<std::uint32_t>{1, 4}));
  EXPECT_EQ(p.to_string(), "(4,1,1)");
  EXPECT_EQ(Partition(p.multiplicities()), p);
  EXPECT_EQ(Partition().to_string(), "()");
}

TEST(Partition, RejectsInconsistentMultiplicities) {
  EXPECT_THROW(Partition({1, 1}), std::invalid_argument);
  const std::uint32_t zero[] = {0};
  EXPECT_THROW(Partition::from_parts(zero), std::invalid_argument);
}

}  // namespace
}  // namespace fecount
