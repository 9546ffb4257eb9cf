#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fecount/limits.hpp"
#include "fecount/monoid.hpp"

namespace fecount::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  /// First counterexample, empty on success.
  std::string counterexample;
};

struct SuiteOptions {
  std::uint32_t max_n = 10;
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::vector<FiniteAbelianGroup> groups;  // empty: Z/1, Z/2, Z/3, Z/4, Z/6
  ResourceLimits limits{};
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws std::invalid_argument for an unknown name.
///
///   rowsum      sum_k nu(n,k) == p(n)
///   divisor     nu(n,1) == number of divisors of n
///   triangle    nu(n,k) == 0 for n < k(k+1)/2, with full row coverage
///   scaling     nu(n,k,p) == filtered enumeration count, nu + nu' split
///   picard-sum  free + (p-1) nonfree == sum_k nu(n,k) p^k
///   product     oracle over N^t == p(n)^t, t <= 3
///   oracle      every determinant target: oracle == formula, per group
///   extension   the oracle suite over Z/4, Z/6 and Z/2 x Z/2
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace fecount::verify
