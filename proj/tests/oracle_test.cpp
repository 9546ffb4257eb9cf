#include "fecount/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

#include "fecount/errors.hpp"
#include "oracles.hpp"

namespace fecount {
namespace {

GroupElement el(const FiniteAbelianGroup& g, std::vector<std::uint64_t> r) {
  return GroupElement(g, std::move(r));
}

TEST(RankSolutions, Examples) {
  RankSolutionStream zero(0);
  auto empty = zero.next();
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->empty());
  EXPECT_FALSE(zero.next());

  std::set<RankSolution> two;
  RankSolutionStream s(2);
  while (auto z = s.next()) two.insert(*z);
  EXPECT_EQ(two, (std::set<RankSolution>{{2, 0}, {0, 1}}));

  EXPECT_EQ(oracle_count_rank(6), BigCount(11));
}

TEST(RankSolutions, BijectiveWithRecursiveEnumeration) {
  for (std::uint32_t n = 0; n <= 16; ++n) {
    std::set<RankSolution> expected, got;
    testing::for_each_multiplicity_vector(n, [&](const auto& z) { expected.insert(z); });
    RankSolutionStream s(n);
    while (auto z = s.next()) ASSERT_TRUE(got.insert(*z).second) << "duplicate at n=" << n;
    ASSERT_EQ(got, expected);
  }
}

TEST(ProductSolutions, Examples) {
  EXPECT_EQ(oracle_count_product(2, 1), BigCount(2));
  EXPECT_EQ(oracle_count_product(2, 2), BigCount(4));
  EXPECT_EQ(oracle_count_product(6, 2), BigCount(121));
  EXPECT_THROW(ProductSolutionStream(3, 0), std::invalid_argument);
}

TEST(ProductSolutions, DistinctAndWellFormed) {
  std::set<std::vector<RankSolution>> seen;
  ProductSolutionStream s(5, 3);
  while (auto sol = s.next()) {
    ASSERT_EQ(sol->components.size(), 3U);
    ASSERT_TRUE(seen.insert(sol->components).second);
  }
  EXPECT_EQ(seen.size(), 7U * 7U * 7U);
}

TEST(ProductSolutions, BudgetIsEnforced) {
  ResourceLimits tight;
  tight.max_oracle_work = 1000;
  EXPECT_THROW(ProductSolutionStream(10, 3, tight), ResourceError);  // 42^3 > 1000
  EXPECT_NO_THROW(ProductSolutionStream(10, 1, tight));
}

TEST(DedekindSolutions, Examples) {
  for (const auto& g : {FiniteAbelianGroup::cyclic(1), FiniteAbelianGroup::cyclic(5),
                        FiniteAbelianGroup({2, 2})}) {
    DedekindSolutionStream s(ModuleClass::free_module(1, g), g);
    auto only = s.next();
    ASSERT_TRUE(only);
    EXPECT_EQ(only->entries, std::vector<ModuleClass>{ModuleClass::free_module(1, g)});
    EXPECT_FALSE(s.next());
  }
  const auto z2 = FiniteAbelianGroup::cyclic(2);
  EXPECT_EQ(oracle_count_dedekind(ModuleClass::make(2, el(z2, {0})), z2), BigCount(3));
  EXPECT_EQ(oracle_count_dedekind(ModuleClass::make(2, el(z2, {1})), z2), BigCount(1));
  EXPECT_EQ(oracle_count_dedekind(ModuleClass::make(6, el(z2, {0})), z2), BigCount(24));
}

TEST(DedekindSolutions, NonFreeRankTwoListing) {
  const auto z2 = FiniteAbelianGroup::cyclic(2);
  DedekindSolutionStream s(ModuleClass::make(2, el(z2, {1})), z2);
  auto sol = s.next();
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->entries[0], ModuleClass::make(2, el(z2, {1})));
  EXPECT_TRUE(sol->entries[1].is_zero());
  EXPECT_FALSE(s.next());
}

TEST(DedekindSolutions, EveryTupleSumsToTheStateSpace) {
  const auto g = FiniteAbelianGroup({2, 3});
  for (const auto& det : all_elements(g)) {
    const auto x = ModuleClass::make(6, det);
    DedekindSolutionStream s(x, g);
    std::set<std::string> seen;
    while (auto sol = s.next()) {
      ASSERT_EQ(sol->entries.size(), 6U);
      ModuleClass sum = ModuleClass::zero();
      std::string key;
      for (std::size_t i = 0; i < sol->entries.size(); ++i) {
        key += sol->entries[i].to_string() + ' ';
        if (sol->entries[i].is_zero()) continue;
        sum = direct_sum(sum, ModuleClass::make(sol->entries[i].rank() * (i + 1),
                                                group_scale(i + 1, sol->entries[i].det())));
      }
      ASSERT_EQ(sum, x);
      ASSERT_TRUE(seen.insert(key).second) << "duplicate " << key;
    }
    EXPECT_EQ(BigCount(seen.size()),
              BigCount(testing::brute_dedekind(6, g.cyclic_orders(), det.residues())));
  }
}

TEST(DedekindSolutions, CanonicalOrderIsPartitionsThenOdometer) {
  const auto z3 = FiniteAbelianGroup::cyclic(3);
  DedekindSolutionStream s(ModuleClass::make(3, el(z3, {0})), z3);
  std::vector<std::string> lines;
  while (auto sol = s.next()) {
    std::string line;
    for (const auto& e : sol->entries) line += e.to_string() + ' ';
    lines.push_back(line);
  }
  // (3): 3a = 0 -> every a; (2,1): 2b + a = 0 -> 3 pairs; (1,1,1): a = 0.
  const std::vector<std::string> expected{
      "0 0 (1;0) ", "0 0 (1;1) ", "0 0 (1;2) ", "(1;0) (1;0) 0 ",
      "(1;1) (1;1) 0 ", "(1;2) (1;2) 0 ", "(3;0) 0 0 ",
  };
  EXPECT_EQ(lines, expected);
}

TEST(DedekindSolutions, Errors) {
  const auto z2 = FiniteAbelianGroup::cyclic(2);
  const auto z3 = FiniteAbelianGroup::cyclic(3);
  EXPECT_THROW(DedekindSolutionStream(ModuleClass::make(2, el(z3, {1})), z2), GroupMismatch);
  ResourceLimits tight;
  tight.max_oracle_work = 10'000;
  EXPECT_THROW(DedekindSolutionStream(ModuleClass::free_module(14, FiniteAbelianGroup::cyclic(8)),
                                      FiniteAbelianGroup::cyclic(8), tight),
               ResourceError);
}

TEST(DedekindSolutions, ZeroStateSpace) {
  EXPECT_EQ(oracle_count_dedekind(ModuleClass::zero(), FiniteAbelianGroup::cyclic(4)), BigCount(1));
  EXPECT_EQ(oracle_count_dedekind_rank(0, FiniteAbelianGroup::cyclic(4)), BigCount(1));
}

TEST(DedekindSolutions, DefaultBudgetCoversRankFourteenOverOrderEight) {
  EXPECT_LE(dedekind_oracle_work(14, 8), Integer(kDefaultLimits.max_oracle_work));
}

}  // namespace
}  // namespace fecount
