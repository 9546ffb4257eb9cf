#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fecount/big_count.hpp"
#include "fecount/limits.hpp"

namespace fecount {

/// Deterministic primality test by trial division.
bool is_prime(std::uint64_t p) noexcept;

/// Throws NotPrime unless `p` is prime.
void require_prime(std::uint64_t p);

/// Largest k with k(k+1)/2 <= n: no partition of n has more distinct sizes.
std::uint32_t max_distinct_sizes(std::size_t n) noexcept;

/// nu(n, k) for all 1 <= n <= n_max and 1 <= k <= n.
///
/// Entries above the triangle bound k(k+1)/2 <= n are zero and are not
/// stored. Built by one DP over part sizes in O(n_max^2 * k_max).
class NuTable {
 public:
  explicit NuTable(std::size_t n_max, const ResourceLimits& limits = kDefaultLimits);

  std::size_t max_n() const noexcept { return row_.size() - 1; }

  /// nu(n, k); zero for k == 0 or k above the triangle bound.
  /// Requires 1 <= n <= max_n().
  BigCount at(std::size_t n, std::size_t k) const;

  /// Nonzero prefix of row n: entry j is nu(n, j + 1).
  const std::vector<Integer>& row(std::size_t n) const { return row_.at(n); }

 private:
  std::vector<std::vector<Integer>> row_;
};

/// Number of partitions of n with exactly k distinct part sizes.
/// Requires n >= 1, k >= 1 (throws std::invalid_argument otherwise).
BigCount nu(std::size_t n, std::size_t k, const ResourceLimits& limits = kDefaultLimits);

/// Partitions counted by nu(n, k) whose part sizes are all multiples of the
/// prime p. Computed as nu(n / p, k) when p | n, else 0.
BigCount nu_p(std::size_t n, std::size_t k, std::uint64_t p,
              const ResourceLimits& limits = kDefaultLimits);

/// nu(n, k) - nu_p(n, k, p).
BigCount nu_prime_complement(std::size_t n, std::size_t k, std::uint64_t p,
                             const ResourceLimits& limits = kDefaultLimits);

inline NuTable nu_table(std::size_t n_max, const ResourceLimits& limits = kDefaultLimits) {
  return NuTable(n_max, limits);
}

}  // namespace fecount
