#include "fecount/nu.hpp"

#include <gtest/gtest.h>

#include "fecount/errors.hpp"
#include "fecount/partition.hpp"
#include "oracles.hpp"

namespace fecount {
namespace {

TEST(Nu, WorkedExamples) {
  EXPECT_EQ(nu(6, 2), BigCount(6));
  EXPECT_EQ(nu(6, 1), BigCount(4));
  EXPECT_EQ(nu(5, 3), BigCount(0));
  EXPECT_EQ(nu(6, 3), BigCount(1));
}

TEST(Nu, RejectsZeroArguments) {
  EXPECT_THROW(nu(0, 1), std::invalid_argument);
  EXPECT_THROW(nu(3, 0), std::invalid_argument);
}

TEST(NuP, WorkedExamples) {
  EXPECT_EQ(nu_p(6, 2, 2), BigCount(1));
  EXPECT_EQ(nu_p(7, 1, 2), BigCount(0));
  EXPECT_EQ(nu_p(6, 2, 3), BigCount(0));
}

TEST(NuP, RequiresPrime) {
  EXPECT_THROW(nu_p(6, 2, 4), NotPrime);
  EXPECT_THROW(nu_p(6, 2, 1), NotPrime);
  EXPECT_THROW(nu_prime_complement(6, 2, 9), NotPrime);
}

TEST(NuComplement, WorkedExamples) {
  EXPECT_EQ(nu_prime_complement(6, 2, 2), BigCount(5));
  EXPECT_EQ(nu_prime_complement(6, 1, 2), BigCount(2));
  EXPECT_EQ(nu_prime_complement(7, 1, 2), BigCount(2));
}

TEST(NuTable, Rows) {
  const NuTable one(1);
  EXPECT_EQ(one.at(1, 1), BigCount(1));
  const NuTable six(6);
  const std::uint64_t expected[] = {4, 6, 1, 0, 0, 0};
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(six.at(6, k), BigCount(expected[k - 1]));
  // Frozen from exhaustive enumeration.
  const NuTable twelve(12);
  const std::uint64_t row12[] = {6, 29, 37, 5};
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(twelve.at(12, k), BigCount(row12[k - 1]));
  EXPECT_EQ(twelve.at(12, 5), BigCount(0));
}

TEST(NuTable, RowSumsArePartitionCounts) {
  const NuTable t(200);
  const auto p = testing::pentagonal_partition_counts(200);
  for (std::size_t n = 1; n <= 200; ++n) {
    Integer sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += t.at(n, k).value();
    ASSERT_EQ(sum, p[n]) << "n=" << n;
  }
}

TEST(NuTable, FirstColumnCountsDivisors) {
  const NuTable t(500);
  for (std::uint64_t n = 1; n <= 500; ++n)
    ASSERT_EQ(t.at(n, 1), BigCount(testing::divisor_count(n))) << "n=" << n;
}

TEST(NuTable, TriangleBound) {
  const NuTable t(200);
  for (std::size_t n = 1; n <= 200; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      if (2 * n < k * (k + 1)) ASSERT_TRUE(t.at(n, k).is_zero()) << n << "," << k;
  EXPECT_EQ(max_distinct_sizes(5), 2U);
  EXPECT_EQ(max_distinct_sizes(6), 3U);
}

TEST(NuTable, MatchesBruteForce) {
  const NuTable t(22);
  for (std::uint32_t n = 1; n <= 22; ++n)
    for (std::uint32_t k = 1; k <= 6; ++k)
      ASSERT_EQ(t.at(n, k), BigCount(testing::brute_nu(n, k))) << n << "," << k;
}

TEST(NuTable, Ceiling) {
  ResourceLimits tight;
  tight.max_n = 30;
  EXPECT_THROW(NuTable(31, tight), ResourceError);
  EXPECT_THROW(NuTable(0), std::invalid_argument);
}

TEST(NuP, ScalingIdentityAgainstFilteredEnumeration) {
  for (std::uint32_t n = 1; n <= 28; ++n)
    for (std::uint32_t k = 1; k <= 8; ++k)
      for (std::uint64_t p : {2, 3, 5}) {
        const auto want = testing::brute_nu(n, k, static_cast<std::uint32_t>(p));
        ASSERT_EQ(nu_p(n, k, p), BigCount(want)) << n << "," << k << "," << p;
        ASSERT_EQ(nu_p(n, k, p) + nu_prime_complement(n, k, p), nu(n, k));
      }
}

TEST(Primality, Basics) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(1'000'000'007));
}

}  // namespace
}  // namespace fecount
