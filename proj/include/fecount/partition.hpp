#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fecount/big_count.hpp"
#include "fecount/limits.hpp"

namespace fecount {

/// A partition of n as a multiplicity vector: multiplicity(i) is the number of
/// parts equal to i, so that sum_i i * multiplicity(i) == n.
class Partition {
 public:
  Partition() = default;

  /// `mult[i - 1]` is the multiplicity of size i; mult.size() must equal the
  /// weighted sum. Throws std::invalid_argument otherwise.
  explicit Partition(std::vector<std::uint32_t> mult);

  /// Builds from parts in any order. Parts must be positive.
  static Partition from_parts(std::span<const std::uint32_t> parts);

  std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(mult_.size()); }

  /// Multiplicity of part size i (1-based); 0 for sizes outside 1..n.
  std::uint32_t multiplicity(std::uint32_t size) const noexcept {
    return size >= 1 && size <= mult_.size() ? mult_[size - 1] : 0;
  }

  /// (z_1, ..., z_n); empty for the empty partition.
  const std::vector<std::uint32_t>& multiplicities() const noexcept { return mult_; }

  /// Parts in weakly decreasing order.
  std::vector<std::uint32_t> parts() const;

  /// Sizes with nonzero multiplicity, increasing.
  std::vector<std::uint32_t> sizes() const;

  /// "(4,1,1)"; "()" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> mult_;
};

/// Number of distinct part sizes, |{i : z_i > 0}|.
std::uint32_t distinct_sizes(const Partition& p) noexcept;

/// p(n), the number of solutions of n = z_1 + 2 z_2 + ... + n z_n over the
/// naturals. p(0) == 1.
BigCount count_partitions(std::size_t n, const ResourceLimits& limits = kDefaultLimits);

/// p(0), ..., p(n_max) from one DP pass.
std::vector<Integer> partition_counts_upto(std::size_t n_max,
                                           const ResourceLimits& limits = kDefaultLimits);

/// Streams every partition of n exactly once, in reverse lexicographic order
/// of the weakly decreasing part lists: for n = 4 that is
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). n = 0 yields the empty partition.
///
/// Single consumer; not thread-safe.
class PartitionStream {
 public:
  explicit PartitionStream(std::uint32_t n);

  /// Advances; std::nullopt once exhausted.
  std::optional<Partition> next();

  /// Advances without materializing a Partition. Returns false once
  /// exhausted; otherwise current_parts() holds the new partition.
  bool advance();
  std::span<const std::uint32_t> current_parts() const noexcept { return parts_; }

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(PartitionStream* s) : stream_(s) { ++*this; }
    const Partition& operator*() const { return *current_; }
    const Partition* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    PartitionStream* stream_ = nullptr;
    std::optional<Partition> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> parts_;
  bool started_ = false;
  bool done_ = false;
};

inline PartitionStream enumerate_partitions(std::uint32_t n) { return PartitionStream(n); }

}  // namespace fecount
