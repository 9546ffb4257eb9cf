#include "fecount/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fecount/errors.hpp"

namespace fecount {

Partition::Partition(std::vector<std::uint32_t> mult) : mult_(std::move(mult)) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) total += (i + 1) * std::uint64_t{mult_[i]};
  if (total != mult_.size())
    throw std::invalid_argument("multiplicity vector does not sum to its length");
}

Partition Partition::from_parts(std::span<const std::uint32_t> parts) {
  std::uint64_t total = 0;
  for (auto part : parts) {
    if (part == 0) throw std::invalid_argument("partition parts must be positive");
    total += part;
  }
  std::vector<std::uint32_t> mult(total, 0);
  for (auto part : parts) ++mult[part - 1];
  return Partition(std::move(mult));
}

std::vector<std::uint32_t> Partition::parts() const {
  std::vector<std::uint32_t> out;
  out.reserve(mult_.size());
  for (std::size_t size = mult_.size(); size >= 1; --size)
    out.insert(out.end(), mult_[size - 1], static_cast<std::uint32_t>(size));
  return out;
}

std::vector<std::uint32_t> Partition::sizes() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] != 0) out.push_back(static_cast<std::uint32_t>(i + 1));
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  bool first = true;
  for (auto part : parts()) {
    if (!first) s += ',';
    s += std::to_string(part);
    first = false;
  }
  return s + ')';
}

std::uint32_t distinct_sizes(const Partition& p) noexcept {
  const auto& m = p.multiplicities();
  return static_cast<std::uint32_t>(std::count_if(m.begin(), m.end(), [](auto z) { return z != 0; }));
}

std::vector<Integer> partition_counts_upto(std::size_t n_max, const ResourceLimits& limits) {
  if (n_max > limits.max_n)
    throw ResourceError("n = " + std::to_string(n_max) + " exceeds the ceiling " +
                        std::to_string(limits.max_n));
  // Rolling row of the table T[i][m] = #partitions of m with parts <= i.
  std::vector<Integer> row(n_max + 1, 0);
  row[0] = 1;
  for (std::size_t part = 1; part <= n_max; ++part)
    for (std::size_t m = part; m <= n_max; ++m) row[m] += row[m - part];
  return row;
}

BigCount count_partitions(std::size_t n, const ResourceLimits& limits) {
  auto row = partition_counts_upto(n, limits);
  return BigCount(std::move(row[n]));
}

PartitionStream::PartitionStream(std::uint32_t n) : n_(n) {}

bool PartitionStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ > 0) parts_.assign(1, n_);
    return true;
  }
  // Strip trailing ones, decrement the last part > 1, refill greedily.
  std::uint32_t freed = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++freed;
  }
  if (parts_.empty()) {
    done_ = true;
    return false;
  }
  const std::uint32_t cap = --parts_.back();
  ++freed;
  while (freed >= cap) {
    parts_.push_back(cap);
    freed -= cap;
  }
  if (freed > 0) parts_.push_back(freed);
  return true;
}

std::optional<Partition> PartitionStream::next() {
  if (!advance()) return std::nullopt;
  return Partition::from_parts(parts_);
}

}  // namespace fecount
