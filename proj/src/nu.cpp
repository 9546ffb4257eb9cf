#include "fecount/nu.hpp"

#include <stdexcept>
#include <string>

#include "fecount/errors.hpp"

namespace fecount {

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(p);
}

std::uint32_t max_distinct_sizes(std::size_t n) noexcept {
  std::uint32_t k = 0;
  while (std::size_t{k + 1} * (k + 2) / 2 <= n) ++k;
  return k;
}

NuTable::NuTable(std::size_t n_max, const ResourceLimits& limits) {
  if (n_max < 1) throw std::invalid_argument("nu table needs n_max >= 1");
  if (n_max > limits.max_n)
    throw ResourceError("n = " + std::to_string(n_max) + " exceeds the ceiling " +
                        std::to_string(limits.max_n));
  const std::size_t k_max = max_distinct_sizes(n_max);

  // g[m][j]: partitions of m, sizes <= i, exactly j distinct sizes.
  // h[m][j]: the subset of those that use size i at least once.
  //   h_i(m, j) = g_{i-1}(m - i, j - 1) + h_i(m - i, j)
  //   g_i(m, j) = g_{i-1}(m, j) + h_i(m, j)
  std::vector<std::vector<Integer>> g(n_max + 1, std::vector<Integer>(k_max + 1, 0));
  std::vector<std::vector<Integer>> h(n_max + 1, std::vector<Integer>(k_max + 1, 0));
  g[0][0] = 1;
  for (std::size_t size = 1; size <= n_max; ++size) {
    for (std::size_t m = size; m <= n_max; ++m) {
      const std::size_t j_cap = max_distinct_sizes(m);
      for (std::size_t j = 1; j <= j_cap; ++j)
        h[m][j] = g[m - size][j - 1] + h[m - size][j];
    }
    for (std::size_t m = size; m <= n_max; ++m) {
      const std::size_t j_cap = max_distinct_sizes(m);
      for (std::size_t j = 1; j <= j_cap; ++j) {
        g[m][j] += h[m][j];
        h[m][j] = 0;
      }
    }
  }

  row_.resize(n_max + 1);
  for (std::size_t m = 1; m <= n_max; ++m) {
    const std::size_t j_cap = max_distinct_sizes(m);
    row_[m].assign(g[m].begin() + 1, g[m].begin() + 1 + static_cast<std::ptrdiff_t>(j_cap));
  }
}

BigCount NuTable::at(std::size_t n, std::size_t k) const {
  if (n < 1 || n > max_n())
    throw std::out_of_range("nu table row " + std::to_string(n) + " not present");
  const auto& r = row_[n];
  if (k == 0 || k > r.size()) return BigCount{};
  return BigCount(r[k - 1]);
}

namespace {

void require_positive(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("nu requires n >= 1 and k >= 1");
}

}  // namespace

BigCount nu(std::size_t n, std::size_t k, const ResourceLimits& limits) {
  require_positive(n, k);
  if (k > max_distinct_sizes(n)) return BigCount{};
  return NuTable(n, limits).at(n, k);
}

BigCount nu_p(std::size_t n, std::size_t k, std::uint64_t p, const ResourceLimits& limits) {
  require_positive(n, k);
  require_prime(p);
  if (n % p != 0) return BigCount{};
  return nu(n / p, k, limits);
}

BigCount nu_prime_complement(std::size_t n, std::size_t k, std::uint64_t p,
                             const ResourceLimits& limits) {
  require_positive(n, k);
  require_prime(p);
  if (k > max_distinct_sizes(n)) return BigCount{};
  NuTable table(n, limits);
  Integer all = table.row(n)[k - 1];
  if (n % p == 0) all -= table.at(n / p, k).value();
  return BigCount(std::move(all));
}

}  // namespace fecount
