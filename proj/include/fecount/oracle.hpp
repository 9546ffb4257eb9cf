#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fecount/big_count.hpp"
#include "fecount/limits.hpp"
#include "fecount/monoid.hpp"
#include "fecount/partition.hpp"

// Exhaustive enumeration of the solution tuples (Z_1, ..., Z_n) of
// X = Z_1 ⊕ Z_2^2 ⊕ ... ⊕ Z_n^n in the monoids N, N^t and [N+ x G] ∪ {0}.
// Every stream re-checks the defining equation of each tuple it emits and
// throws std::logic_error if one fails. Streams are single-consumer.

namespace fecount {

/// (z_1, ..., z_n) with sum_i i z_i == n.
using RankSolution = std::vector<std::uint32_t>;

/// One rank solution per factor of N^t.
struct ProductSolution {
  std::vector<RankSolution> components;
  friend bool operator==(const ProductSolution&, const ProductSolution&) = default;
};

/// (Z_1, ..., Z_n) over a Dedekind domain with finite Picard group.
struct DedekindSolution {
  std::vector<ModuleClass> entries;
  friend bool operator==(const DedekindSolution&, const DedekindSolution&) = default;
};

/// Solutions over N, in the partition stream order.
class RankSolutionStream {
 public:
  RankSolutionStream(std::uint32_t n, const ResourceLimits& limits = kDefaultLimits);
  std::optional<RankSolution> next();

 private:
  std::uint32_t n_;
  PartitionStream partitions_;
};

/// Solutions over N^t of (n, ..., n) = x_1 + 2 x_2 + ... + n x_n: a t-fold
/// odometer over the rank solutions of n, last component fastest.
class ProductSolutionStream {
 public:
  ProductSolutionStream(std::uint32_t n, std::uint32_t t,
                        const ResourceLimits& limits = kDefaultLimits);
  std::optional<ProductSolution> next();

 private:
  std::uint32_t n_;
  std::vector<RankSolution> base_;
  std::vector<std::size_t> index_;
  bool done_ = false;
};

/// Solutions over [N+ x G] ∪ {0} with weighted sum X. Outer loop over rank
/// solutions in partition order; inner odometer over the determinants of
/// the nonzero entries (in increasing size order, residues in
/// all_elements order). Zero entries contribute nothing.
class DedekindSolutionStream {
 public:
  DedekindSolutionStream(ModuleClass x, FiniteAbelianGroup group,
                         const ResourceLimits& limits = kDefaultLimits);
  std::optional<DedekindSolution> next();

 private:
  bool load_next_partition();
  bool advance_assignment();
  DedekindSolution current() const;

  ModuleClass x_;
  FiniteAbelianGroup group_;
  std::vector<GroupElement> elements_;
  PartitionStream partitions_;
  std::optional<Partition> partition_;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::size_t> assignment_;
  bool fresh_ = false;
};

/// Number of candidate tuples a Dedekind oracle run would visit, bounded
/// above by p(n) * |G|^(k_max(n)).
Integer dedekind_oracle_work(std::uint32_t n, std::uint64_t group_order);

BigCount oracle_count_rank(std::uint32_t n, const ResourceLimits& limits = kDefaultLimits);
BigCount oracle_count_product(std::uint32_t n, std::uint32_t t,
                              const ResourceLimits& limits = kDefaultLimits);
BigCount oracle_count_dedekind(const ModuleClass& x, const FiniteAbelianGroup& group,
                               const ResourceLimits& limits = kDefaultLimits);
/// Sum of oracle_count_dedekind over every determinant of rank n.
BigCount oracle_count_dedekind_rank(std::uint32_t n, const FiniteAbelianGroup& group,
                                    const ResourceLimits& limits = kDefaultLimits);

}  // namespace fecount
