#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fecount/big_count.hpp"
#include "fecount/limits.hpp"
#include "fecount/monoid.hpp"

namespace fecount {

/// Where a reported count comes from.
enum class Provenance {
  PaperFormula,      // a closed formula for the ring class at hand
  ExtensionFormula,  // the gcd-based count for composite or non-cyclic Picard groups
  Oracle,            // exhaustive enumeration
};

std::string_view to_string(Provenance p) noexcept;

/// Feedback classes of systems over R^n, R projectively trivial: p(n).
BigCount fe_trivial(std::uint64_t n, const ResourceLimits& limits = kDefaultLimits);

/// Feedback classes over R^n for R = R_1 x ... x R_t: the product of the
/// per-factor counts over R_i^n. Factors must be trivial or Dedekind.
BigCount fe_product(const std::vector<RingSpec>& factors, std::uint64_t n,
                    const ResourceLimits& limits = kDefaultLimits);

/// Classes over all state spaces of rank n over a Dedekind domain with
/// |Pic| = d: sum_k nu(n, k) d^k. Infinite for an infinite Picard group.
BigCount fe_dedekind_rank(std::uint64_t n, const PicardSpec& pic,
                          const ResourceLimits& limits = kDefaultLimits);
BigCount fe_dedekind_rank(std::uint64_t n, std::uint64_t picard_order,
                          const ResourceLimits& limits = kDefaultLimits);

/// Classes over the free module R^n, |Pic| = p prime:
/// sum_k nu(n,k,p) p^k + nu'(n,k,p) p^(k-1).
BigCount fe_dedekind_free(std::uint64_t n, std::uint64_t p,
                          const ResourceLimits& limits = kDefaultLimits);

/// Classes over R^(n-1) ⊕ L with L nontrivial, |Pic| = p prime:
/// sum_k nu'(n,k,p) p^(k-1). Requires n >= 1.
BigCount fe_dedekind_nonfree(std::uint64_t n, std::uint64_t p,
                             const ResourceLimits& limits = kDefaultLimits);

/// Classes over the rank-n module with determinant `target`, for any finite
/// Picard group. Polynomial in n: a DP over part sizes tracking, per cyclic
/// factor, the gcd of the order with the sizes used so far.
BigCount fe_dedekind_module(std::uint64_t n, const FiniteAbelianGroup& group,
                            const GroupElement& target,
                            const ResourceLimits& limits = kDefaultLimits);

/// Number of assignments (a_s)_{s in sizes}, a_s in `group`, with
/// sum_s s * a_s == target. With g_j = gcd(m_j, sizes...) this is
/// prod_j m_j^(|sizes|-1) * g_j when every g_j divides b_j, else 0.
/// `sizes` must be nonempty, positive and pairwise distinct.
BigCount count_det_solutions(const std::vector<std::uint64_t>& sizes, const GroupElement& target,
                             const FiniteAbelianGroup& group);

/// What the state space of a count query is.
struct StateSpace {
  enum class Kind {
    AnyOfRank,  // every state space of rank n, counted together
    Free,       // R^n
    NonFree,    // R^(n-1) ⊕ L for an unspecified nontrivial L
    Module,     // an explicit ModuleClass over a Dedekind domain
  };

  Kind kind = Kind::Free;
  std::uint64_t rank = 0;
  std::optional<ModuleClass> module;

  static StateSpace any_of_rank(std::uint64_t n) { return {Kind::AnyOfRank, n, std::nullopt}; }
  static StateSpace free(std::uint64_t n) { return {Kind::Free, n, std::nullopt}; }
  static StateSpace nonfree(std::uint64_t n) { return {Kind::NonFree, n, std::nullopt}; }
  static StateSpace of(ModuleClass x) {
    const auto r = x.rank();
    return {Kind::Module, r, std::move(x)};
  }
};

struct FeResult {
  BigCount count;
  Provenance provenance;
};

/// Routes a (ring, state space) query to the formula that applies. Throws
/// IncompatibleSpec when the query is not meaningful or is not determined
/// by the given data (e.g. a non-free state over a projectively trivial ring).
FeResult fe_dispatch(const RingSpec& ring, const StateSpace& state,
                     const ResourceLimits& limits = kDefaultLimits);

}  // namespace fecount
