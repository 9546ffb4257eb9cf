#include "fecount/oracle.hpp"

#include <stdexcept>
#include <string>

#include "fecount/errors.hpp"
#include "fecount/nu.hpp"

namespace fecount {

namespace {

void require_work(const Integer& work, const ResourceLimits& limits, const char* what) {
  if (work > limits.max_oracle_work)
    throw ResourceError(std::string(what) + " oracle would visit " + work.str() +
                        " candidates, above the budget of " +
                        std::to_string(limits.max_oracle_work));
}

void check_rank_solution(const RankSolution& z, std::uint32_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < z.size(); ++i) total += (i + 1) * std::uint64_t{z[i]};
  if (total != n || z.size() != n)
    throw std::logic_error("emitted rank solution does not solve the rank equation");
}

RankSolution padded(const Partition& p) { return p.multiplicities(); }

}  // namespace

RankSolutionStream::RankSolutionStream(std::uint32_t n, const ResourceLimits& limits)
    : n_(n), partitions_(n) {
  require_work(count_partitions(n, limits).value(), limits, "rank");
}

std::optional<RankSolution> RankSolutionStream::next() {
  auto p = partitions_.next();
  if (!p) return std::nullopt;
  RankSolution z = padded(*p);
  check_rank_solution(z, n_);
  return z;
}

ProductSolutionStream::ProductSolutionStream(std::uint32_t n, std::uint32_t t,
                                             const ResourceLimits& limits)
    : n_(n) {
  if (t == 0) throw std::invalid_argument("a product needs t >= 1 factors");
  const auto p = count_partitions(n, limits);
  require_work(boost::multiprecision::pow(p.value(), t), limits, "product");
  for (auto& part : enumerate_partitions(n)) base_.push_back(padded(part));
  index_.assign(t, 0);
}

std::optional<ProductSolution> ProductSolutionStream::next() {
  if (done_) return std::nullopt;
  ProductSolution s;
  s.components.reserve(index_.size());
  for (auto i : index_) {
    check_rank_solution(base_[i], n_);
    s.components.push_back(base_[i]);
  }
  std::size_t j = index_.size();
  for (;;) {
    if (j == 0) {
      done_ = true;
      break;
    }
    --j;
    if (++index_[j] < base_.size()) break;
    index_[j] = 0;
  }
  return s;
}

Integer dedekind_oracle_work(std::uint32_t n, std::uint64_t group_order) {
  const auto p = count_partitions(n, ResourceLimits{.max_n = n, .max_oracle_work = 0});
  return p.value() * boost::multiprecision::pow(Integer(group_order), max_distinct_sizes(n));
}

DedekindSolutionStream::DedekindSolutionStream(ModuleClass x, FiniteAbelianGroup group,
                                               const ResourceLimits& limits)
    : x_(std::move(x)),
      group_(std::move(group)),
      elements_(all_elements(group_)),
      partitions_(static_cast<std::uint32_t>(x_.rank())) {
  if (!x_.is_zero() && !(x_.det().group() == group_))
    throw GroupMismatch("state space determinant lies in " + x_.det().group().to_string() +
                        ", not " + group_.to_string());
  if (x_.rank() > limits.max_n)
    throw ResourceError("rank " + std::to_string(x_.rank()) + " exceeds the ceiling");
  require_work(dedekind_oracle_work(static_cast<std::uint32_t>(x_.rank()), group_.order()),
               limits, "Dedekind");
}

bool DedekindSolutionStream::load_next_partition() {
  partition_ = partitions_.next();
  if (!partition_) return false;
  sizes_ = partition_->sizes();
  assignment_.assign(sizes_.size(), 0);
  fresh_ = true;
  return true;
}

bool DedekindSolutionStream::advance_assignment() {
  if (fresh_) {
    fresh_ = false;
    return true;
  }
  std::size_t j = assignment_.size();
  while (j > 0) {
    --j;
    if (++assignment_[j] < elements_.size()) return true;
    assignment_[j] = 0;
  }
  return false;
}

DedekindSolution DedekindSolutionStream::current() const {
  DedekindSolution s;
  s.entries.assign(partition_->n(), ModuleClass::zero());
  for (std::size_t j = 0; j < sizes_.size(); ++j)
    s.entries[sizes_[j] - 1] =
        ModuleClass::make(partition_->multiplicity(sizes_[j]), elements_[assignment_[j]]);
  return s;
}

std::optional<DedekindSolution> DedekindSolutionStream::next() {
  for (;;) {
    if (!partition_ || !advance_assignment()) {
      if (!load_next_partition()) return std::nullopt;
      advance_assignment();
    }
    DedekindSolution s = current();
    // X ?= Z_1 ⊕ Z_2^2 ⊕ ... ⊕ Z_n^n, evaluated with the monoid law itself.
    ModuleClass sum = ModuleClass::zero();
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      if (s.entries[i].is_zero()) continue;
      for (std::size_t copy = 0; copy <= i; ++copy) sum = direct_sum(sum, s.entries[i]);
    }
    if (!(sum == x_)) continue;
    if (rank_of(sum) != x_.rank())
      throw std::logic_error("emitted tuple does not solve the rank equation");
    return s;
  }
}

BigCount oracle_count_rank(std::uint32_t n, const ResourceLimits& limits) {
  RankSolutionStream s(n, limits);
  Integer count = 0;
  while (s.next()) ++count;
  return BigCount(std::move(count));
}

BigCount oracle_count_product(std::uint32_t n, std::uint32_t t, const ResourceLimits& limits) {
  ProductSolutionStream s(n, t, limits);
  Integer count = 0;
  while (s.next()) ++count;
  return BigCount(std::move(count));
}

BigCount oracle_count_dedekind(const ModuleClass& x, const FiniteAbelianGroup& group,
                               const ResourceLimits& limits) {
  DedekindSolutionStream s(x, group, limits);
  Integer count = 0;
  while (s.next()) ++count;
  return BigCount(std::move(count));
}

BigCount oracle_count_dedekind_rank(std::uint32_t n, const FiniteAbelianGroup& group,
                                    const ResourceLimits& limits) {
  if (n == 0) return oracle_count_dedekind(ModuleClass::zero(), group, limits);
  BigCount total;
  for (const auto& det : all_elements(group))
    total += oracle_count_dedekind(ModuleClass::make(n, det), group, limits);
  return total;
}

}  // namespace fecount
