#include "fecount/feedback.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fecount/errors.hpp"
#include "fecount/nu.hpp"
#include "fecount/partition.hpp"

namespace fecount {

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::PaperFormula:
      return "paper-formula";
    case Provenance::ExtensionFormula:
      return "extension-formula";
    case Provenance::Oracle:
      return "oracle";
  }
  return "unknown";
}

namespace {

void require_within(std::uint64_t n, const ResourceLimits& limits) {
  if (n > limits.max_n)
    throw ResourceError("n = " + std::to_string(n) + " exceeds the ceiling " +
                        std::to_string(limits.max_n));
}

void require_same_group(const FiniteAbelianGroup& expected, const GroupElement& x) {
  if (!(x.group() == expected))
    throw GroupMismatch("element of " + x.group().to_string() + " given for " +
                        expected.to_string());
}

}  // namespace

BigCount fe_trivial(std::uint64_t n, const ResourceLimits& limits) {
  return count_partitions(n, limits);
}

BigCount fe_dedekind_rank(std::uint64_t n, std::uint64_t picard_order,
                          const ResourceLimits& limits) {
  if (picard_order == 0) throw std::invalid_argument("Picard group order must be >= 1");
  if (n == 0) return 1;
  require_within(n, limits);
  const NuTable table(n, limits);
  const Integer d = picard_order;
  Integer total = 0;
  Integer power = 1;
  for (const auto& nu_nk : table.row(n)) {
    power *= d;
    total += nu_nk * power;
  }
  return BigCount(std::move(total));
}

BigCount fe_dedekind_rank(std::uint64_t n, const PicardSpec& pic, const ResourceLimits& limits) {
  if (pic.is_infinite()) return n == 0 ? BigCount(1) : BigCount::infinite();
  return fe_dedekind_rank(n, pic.group->order(), limits);
}

namespace {

// nu(n,k,p) and nu'(n,k,p) for k = 1..k_max(n), read off one table.
struct PrimeSplit {
  std::vector<Integer> divisible;
  std::vector<Integer> complement;
};

PrimeSplit split_by_prime(std::uint64_t n, std::uint64_t p, const ResourceLimits& limits) {
  require_within(n, limits);
  const NuTable table(n, limits);
  const auto& all = table.row(n);
  PrimeSplit s{std::vector<Integer>(all.size(), 0), all};
  if (n % p == 0) {
    const auto& scaled = table.row(n / p);
    for (std::size_t j = 0; j < scaled.size(); ++j) {
      s.divisible[j] = scaled[j];
      s.complement[j] -= scaled[j];
    }
  }
  return s;
}

}  // namespace

BigCount fe_dedekind_free(std::uint64_t n, std::uint64_t p, const ResourceLimits& limits) {
  require_prime(p);
  if (n == 0) return 1;
  const auto split = split_by_prime(n, p, limits);
  Integer total = 0;
  Integer lower = 1;  // p^(k-1)
  for (std::size_t j = 0; j < split.divisible.size(); ++j) {
    total += split.divisible[j] * lower * p + split.complement[j] * lower;
    lower *= p;
  }
  return BigCount(std::move(total));
}

BigCount fe_dedekind_nonfree(std::uint64_t n, std::uint64_t p, const ResourceLimits& limits) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("a non-free state space needs rank >= 1");
  const auto split = split_by_prime(n, p, limits);
  Integer total = 0;
  Integer lower = 1;
  for (const auto& c : split.complement) {
    total += c * lower;
    lower *= p;
  }
  return BigCount(std::move(total));
}

BigCount count_det_solutions(const std::vector<std::uint64_t>& sizes, const GroupElement& target,
                             const FiniteAbelianGroup& group) {
  require_same_group(group, target);
  if (sizes.empty()) throw std::invalid_argument("size set must be nonempty");
  auto sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == 0) throw std::invalid_argument("sizes must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("sizes must be pairwise distinct");

  const auto& orders = group.cyclic_orders();
  Integer total = 1;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    std::uint64_t g = orders[j];
    for (auto s : sorted) g = std::gcd(g, s);
    if (target.residues()[j] % g != 0) return BigCount{};
    Integer factor = boost::multiprecision::pow(Integer(orders[j]),
                                                static_cast<unsigned>(sorted.size() - 1));
    total *= factor * g;
  }
  return BigCount(std::move(total));
}

BigCount fe_dedekind_module(std::uint64_t n, const FiniteAbelianGroup& group,
                            const GroupElement& target, const ResourceLimits& limits) {
  require_same_group(group, target);
  if (n == 0) return target.is_identity() ? 1 : 0;
  require_within(n, limits);

  // dp[m][gcds]: partitions of m weighted by |G|^(number of sizes used - 1),
  // keyed by gcd(m_j, sizes used) per cyclic factor. The empty partition
  // sits at dp[0][orders] with weight 1 and no |G| factor.
  using Key = std::vector<std::uint64_t>;
  const auto& orders = group.cyclic_orders();
  const Integer group_order = group.order();
  std::vector<std::map<Key, Integer>> dp(n + 1);
  dp[0][orders] = 1;
  for (std::uint64_t size = 1; size <= n; ++size) {
    // Writes go only to larger totals, so a descending sweep reads old values.
    for (std::uint64_t m = n - size + 1; m-- > 0;) {
      for (const auto& [key, weight] : dp[m]) {
        Key next = key;
        for (auto& g : next) g = std::gcd(g, size);
        const Integer w = m == 0 ? weight : weight * group_order;
        for (std::uint64_t total = m + size; total <= n; total += size) dp[total][next] += w;
      }
    }
  }

  Integer result = 0;
  for (const auto& [key, weight] : dp[n]) {
    Integer factor = weight;
    bool solvable = true;
    for (std::size_t j = 0; j < key.size(); ++j) {
      if (target.residues()[j] % key[j] != 0) {
        solvable = false;
        break;
      }
      factor *= key[j];
    }
    if (solvable) result += factor;
  }
  return BigCount(std::move(result));
}

namespace {

bool prime_order(const FiniteAbelianGroup& g) { return is_prime(g.order()); }

// Free state R^n over one factor of a product ring.
FeResult fe_free_factor(const RingSpec& ring, std::uint64_t n, const ResourceLimits& limits);

// A Dedekind domain with infinite Picard group. Any rank solution with two or
// more distinct sizes has a determinant equation whose solution set is empty
// or infinite; for n >= 3 the partition (n-1, 1) gives infinitely many.
// At n = 2 the count is 1 + |Pic[2]| or |{L : L^2 = target}|, which the
// bare marker does not determine.
FeResult fe_infinite_picard(const StateSpace& state) {
  const auto n = state.rank;
  switch (state.kind) {
    case StateSpace::Kind::AnyOfRank:
      return {n == 0 ? BigCount(1) : BigCount::infinite(), Provenance::PaperFormula};
    case StateSpace::Kind::Free:
    case StateSpace::Kind::NonFree:
      if (state.kind == StateSpace::Kind::NonFree && n == 0)
        throw IncompatibleSpec("a non-free state space needs rank >= 1");
      if (n <= 1) return {BigCount(1), Provenance::ExtensionFormula};
      if (n == 2)
        throw IncompatibleSpec(
            "rank 2 over an infinite Picard group depends on its 2-torsion; give a finite group");
      return {BigCount::infinite(), Provenance::ExtensionFormula};
    case StateSpace::Kind::Module:
      throw IncompatibleSpec("explicit module classes need a finite Picard group");
  }
  throw std::logic_error("unhandled state kind");
}

FeResult fe_dedekind_finite(const FiniteAbelianGroup& group, const StateSpace& state,
                            const ResourceLimits& limits) {
  const auto n = state.rank;
  const bool prime = prime_order(group);
  switch (state.kind) {
    case StateSpace::Kind::AnyOfRank:
      return {fe_dedekind_rank(n, group.order(), limits), Provenance::PaperFormula};
    case StateSpace::Kind::Free:
      if (group.is_trivial()) return {fe_trivial(n, limits), Provenance::PaperFormula};
      if (prime) return {fe_dedekind_free(n, group.order(), limits), Provenance::PaperFormula};
      return {fe_dedekind_module(n, group, GroupElement::identity(group), limits),
              Provenance::ExtensionFormula};
    case StateSpace::Kind::NonFree:
      if (n == 0) throw IncompatibleSpec("a non-free state space needs rank >= 1");
      if (group.is_trivial())
        throw IncompatibleSpec("a trivial Picard group has no non-free state spaces");
      if (prime) return {fe_dedekind_nonfree(n, group.order(), limits), Provenance::PaperFormula};
      throw IncompatibleSpec("for " + group.to_string() +
                             " the non-free count depends on the determinant; pass it explicitly");
    case StateSpace::Kind::Module: {
      const ModuleClass& x = *state.module;
      if (x.is_zero()) return {BigCount(1), Provenance::PaperFormula};
      require_same_group(group, x.det());
      if (x.det().is_identity()) return fe_dedekind_finite(group, StateSpace::free(n), limits);
      if (prime) return {fe_dedekind_nonfree(n, group.order(), limits), Provenance::PaperFormula};
      return {fe_dedekind_module(n, group, x.det(), limits), Provenance::ExtensionFormula};
    }
  }
  throw std::logic_error("unhandled state kind");
}

FeResult fe_free_factor(const RingSpec& ring, std::uint64_t n, const ResourceLimits& limits) {
  switch (ring.kind()) {
    case RingSpec::Kind::ProjectivelyTrivial:
      return {fe_trivial(n, limits), Provenance::PaperFormula};
    case RingSpec::Kind::Dedekind: {
      const auto& pic = ring.picard();
      if (pic.is_infinite()) return fe_infinite_picard(StateSpace::free(n));
      return fe_dedekind_finite(*pic.group, StateSpace::free(n), limits);
    }
    case RingSpec::Kind::Product:
      break;
  }
  throw IncompatibleSpec("nested product factors must be flattened");
}

FeResult combine(FeResult acc, const FeResult& next) {
  acc.count *= next.count;
  if (next.provenance != Provenance::PaperFormula) acc.provenance = next.provenance;
  return acc;
}

}  // namespace

BigCount fe_product(const std::vector<RingSpec>& factors, std::uint64_t n,
                    const ResourceLimits& limits) {
  if (factors.empty()) throw std::invalid_argument("a product ring needs at least one factor");
  BigCount total = 1;
  for (const auto& f : factors) total *= fe_free_factor(f, n, limits).count;
  return total;
}

FeResult fe_dispatch(const RingSpec& ring, const StateSpace& state, const ResourceLimits& limits) {
  using Kind = StateSpace::Kind;
  switch (ring.kind()) {
    case RingSpec::Kind::ProjectivelyTrivial:
      if (state.kind == Kind::NonFree)
        throw IncompatibleSpec("projectively trivial rings have only free state spaces");
      if (state.kind == Kind::Module && !state.module->is_zero() &&
          !state.module->det().group().is_trivial())
        throw IncompatibleSpec(
            "projectively trivial rings have only free state spaces; a determinant in " +
            state.module->det().group().to_string() + " was given");
      return {fe_trivial(state.rank, limits), Provenance::PaperFormula};

    case RingSpec::Kind::Dedekind: {
      const auto& pic = ring.picard();
      if (pic.is_infinite()) return fe_infinite_picard(state);
      return fe_dedekind_finite(*pic.group, state, limits);
    }

    case RingSpec::Kind::Product: {
      if (state.kind == Kind::NonFree || state.kind == Kind::Module)
        throw IncompatibleSpec("product rings are supported only with a free state space R^n");
      FeResult acc{BigCount(1), Provenance::PaperFormula};
      for (const auto& f : ring.factors()) {
        if (state.kind == Kind::AnyOfRank && f.kind() == RingSpec::Kind::Dedekind)
          acc = combine(acc, fe_dispatch(f, state, limits));
        else
          acc = combine(acc, fe_free_factor(f, state.rank, limits));
      }
      return acc;
    }
  }
  throw std::logic_error("unhandled ring kind");
}

}  // namespace fecount
