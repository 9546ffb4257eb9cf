#pragma once

// Test-only reference computations. None of these touch the library's
// counting paths; they exist to check them.

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fecount::testing {

using BigInt = boost::multiprecision::cpp_int;

/// p(0..n_max) by Euler's pentagonal number recurrence.
inline std::vector<BigInt> pentagonal_partition_counts(std::size_t n_max) {
  std::vector<BigInt> p(n_max + 1, 0);
  p[0] = 1;
  for (std::size_t m = 1; m <= n_max; ++m) {
    BigInt acc = 0;
    for (std::int64_t j = 1;; ++j) {
      const auto g1 = static_cast<std::size_t>(j * (3 * j - 1) / 2);
      if (g1 > m) break;
      const bool plus = (j % 2) == 1;
      const auto g2 = static_cast<std::size_t>(j * (3 * j + 1) / 2);
      BigInt term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (plus)
        acc += term;
      else
        acc -= term;
    }
    p[m] = acc;
  }
  return p;
}

/// Every (z_1..z_n) with sum i z_i == n, by plain recursion over sizes from
/// largest to smallest.
inline void for_each_multiplicity_vector(std::uint32_t n,
                                         const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> z(n, 0);
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t size, std::uint32_t rem) {
    if (size == 0) {
      if (rem == 0) fn(z);
      return;
    }
    for (std::uint32_t c = 0; c * size <= rem; ++c) {
      z[size - 1] = c;
      rec(size - 1, rem - c * size);
    }
    z[size - 1] = 0;
  };
  rec(n, n);
}

inline std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) c += (d * d == n) ? 1 : 2;
  return c;
}

/// nu(n, k) by enumerating multiplicity vectors.
inline std::uint64_t brute_nu(std::uint32_t n, std::uint32_t k, std::uint32_t divisible_by = 1) {
  std::uint64_t count = 0;
  for_each_multiplicity_vector(n, [&](const std::vector<std::uint32_t>& z) {
    std::uint32_t distinct = 0;
    bool ok = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (z[i] == 0) continue;
      ++distinct;
      if ((i + 1) % divisible_by != 0) ok = false;
    }
    if (distinct == k && ok) ++count;
  });
  return count;
}

/// Solutions of sum_s s * a_s == target over prod Z/m_j by trying every
/// assignment.
inline std::uint64_t brute_det_solutions(const std::vector<std::uint64_t>& sizes,
                                         const std::vector<std::uint64_t>& target,
                                         const std::vector<std::uint64_t>& orders) {
  const std::size_t k = sizes.size(), s = orders.size();
  std::vector<std::uint64_t> a(k * s, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool hit = true;
    for (std::size_t j = 0; j < s && hit; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum = (sum + sizes[i] * a[i * s + j]) % orders[j];
      hit = sum == target[j] % orders[j];
    }
    if (hit) ++count;
    std::size_t pos = 0;
    while (pos < a.size()) {
      if (++a[pos] < orders[pos % s]) break;
      a[pos] = 0;
      ++pos;
    }
    if (pos == a.size()) return count;
  }
}

/// Dedekind solution count for rank n and target det, from multiplicity
/// vectors and brute_det_solutions.
inline std::uint64_t brute_dedekind(std::uint32_t n, const std::vector<std::uint64_t>& orders,
                                    const std::vector<std::uint64_t>& target) {
  std::uint64_t total = 0;
  for_each_multiplicity_vector(n, [&](const std::vector<std::uint32_t>& z) {
    std::vector<std::uint64_t> sizes;
    for (std::uint32_t i = 0; i < n; ++i)
      if (z[i]) sizes.push_back(i + 1);
    if (sizes.empty())
      total += 1;
    else
      total += brute_det_solutions(sizes, target, orders);
  });
  return total;
}

}  // namespace fecount::testing
