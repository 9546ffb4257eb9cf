#include "fecount/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "fecount/feedback.hpp"
#include "fecount/nu.hpp"
#include "fecount/oracle.hpp"
#include "fecount/partition.hpp"

namespace fecount::verify {

namespace {

struct Recorder {
  explicit Recorder(std::string name) { result.name = std::move(name); }

  SuiteResult result;

  // Returns false once a failure has been recorded so callers can stop early.
  template <typename A, typename B>
  bool expect_eq(const A& got, const B& want, const std::string& where) {
    ++result.checks;
    if (got == want) return true;
    std::ostringstream os;
    os << where << ": got " << got << ", expected " << want;
    result.passed = false;
    result.counterexample = os.str();
    return false;
  }
};

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

SuiteResult rowsum(const SuiteOptions& o) {
  Recorder r("rowsum");
  const NuTable table(o.max_n, o.limits);
  const auto p = partition_counts_upto(o.max_n, o.limits);
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    Integer sum = 0;
    for (const auto& v : table.row(n)) sum += v;
    if (!r.expect_eq(sum, p[n], "n=" + std::to_string(n))) break;
  }
  return r.result;
}

SuiteResult divisor(const SuiteOptions& o) {
  Recorder r("divisor");
  const NuTable table(o.max_n, o.limits);
  for (std::size_t n = 1; n <= o.max_n; ++n)
    if (!r.expect_eq(table.at(n, 1), BigCount(divisor_count(n)), "n=" + std::to_string(n))) break;
  return r.result;
}

SuiteResult triangle(const SuiteOptions& o) {
  Recorder r("triangle");
  const NuTable table(o.max_n, o.limits);
  const auto p = partition_counts_upto(o.max_n, o.limits);
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    const std::string where = "n=" + std::to_string(n);
    // The rows below the bound already exhaust p(n), so everything above is 0.
    Integer below = 0;
    for (std::size_t k = 1; k * (k + 1) / 2 <= n; ++k) below += table.at(n, k).value();
    if (!r.expect_eq(below, p[n], where + " (mass below the bound)")) return r.result;
    for (std::size_t k = 1; k <= n; ++k)
      if (n < k * (k + 1) / 2 &&
          !r.expect_eq(table.at(n, k), BigCount{}, where + " k=" + std::to_string(k)))
        return r.result;
  }
  return r.result;
}

SuiteResult scaling(const SuiteOptions& o) {
  Recorder r("scaling");
  for (std::uint32_t n = 1; n <= o.max_n; ++n) {
    const std::uint32_t k_cap = std::min<std::uint32_t>(8, n);
    for (auto p : o.primes) {
      std::vector<Integer> all(k_cap + 1, 0), divisible(k_cap + 1, 0);
      PartitionStream stream(n);
      while (stream.advance()) {
        std::uint32_t distinct = 0, last = 0;
        bool every = true;
        for (auto part : stream.current_parts()) {
          if (part != last) ++distinct;
          last = part;
          if (part % p != 0) every = false;
        }
        if (distinct > k_cap) continue;
        ++all[distinct];
        if (every) ++divisible[distinct];
      }
      for (std::uint32_t k = 1; k <= k_cap; ++k) {
        const std::string where =
            "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p);
        if (!r.expect_eq(nu_p(n, k, p, o.limits), BigCount(divisible[k]), where + " nu_p") ||
            !r.expect_eq(nu_prime_complement(n, k, p, o.limits),
                         BigCount(Integer(all[k] - divisible[k])), where + " nu'"))
          return r.result;
      }
    }
  }
  return r.result;
}

SuiteResult picard_sum(const SuiteOptions& o) {
  Recorder r("picard-sum");
  for (std::uint32_t n = 1; n <= o.max_n; ++n)
    for (auto p : o.primes) {
      const auto lhs = fe_dedekind_free(n, p, o.limits) +
                       BigCount(p - 1) * fe_dedekind_nonfree(n, p, o.limits);
      if (!r.expect_eq(lhs, fe_dedekind_rank(n, p, o.limits),
                       "n=" + std::to_string(n) + " p=" + std::to_string(p)))
        return r.result;
    }
  return r.result;
}

SuiteResult product(const SuiteOptions& o) {
  Recorder r("product");
  for (std::uint32_t n = 0; n <= o.max_n; ++n)
    for (std::uint32_t t = 1; t <= 3; ++t) {
      const std::vector<RingSpec> factors(t, RingSpec::projectively_trivial());
      if (!r.expect_eq(oracle_count_product(n, t, o.limits), fe_product(factors, n, o.limits),
                       "n=" + std::to_string(n) + " t=" + std::to_string(t)))
        return r.result;
    }
  return r.result;
}

SuiteResult oracle_groups(const std::string& name, const std::vector<FiniteAbelianGroup>& groups,
                          const SuiteOptions& o) {
  Recorder r(name);
  for (const auto& g : groups) {
    const auto ring = RingSpec::dedekind(PicardSpec::finite(g));
    for (std::uint32_t n = 1; n <= o.max_n; ++n) {
      const std::string at = g.to_string() + " n=" + std::to_string(n);
      BigCount summed;
      for (const auto& det : all_elements(g)) {
        const auto x = ModuleClass::make(n, det);
        const auto oracle = oracle_count_dedekind(x, g, o.limits);
        summed += oracle;
        if (!r.expect_eq(fe_dispatch(ring, StateSpace::of(x), o.limits).count, oracle,
                         at + " det=" + det.to_string()) ||
            !r.expect_eq(fe_dedekind_module(n, g, det, o.limits), oracle,
                         at + " det=" + det.to_string() + " (gcd count)"))
          return r.result;
        if (is_prime(g.order())) {
          const auto formula = det.is_identity() ? fe_dedekind_free(n, g.order(), o.limits)
                                                 : fe_dedekind_nonfree(n, g.order(), o.limits);
          if (!r.expect_eq(formula, oracle, at + " det=" + det.to_string() + " (prime formula)"))
            return r.result;
        }
      }
      if (!r.expect_eq(fe_dedekind_rank(n, g.order(), o.limits), summed, at + " (all targets)"))
        return r.result;
    }
  }
  return r.result;
}

std::vector<FiniteAbelianGroup> default_groups() {
  std::vector<FiniteAbelianGroup> g;
  for (std::uint64_t m : {1, 2, 3, 4, 6}) g.push_back(FiniteAbelianGroup::cyclic(m));
  return g;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rowsum",     "divisor", "triangle", "scaling",
                                              "picard-sum", "product", "oracle",   "extension"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "rowsum") return rowsum(options);
  if (name == "divisor") return divisor(options);
  if (name == "triangle") return triangle(options);
  if (name == "scaling") return scaling(options);
  if (name == "picard-sum") return picard_sum(options);
  if (name == "product") return product(options);
  if (name == "oracle")
    return oracle_groups(name, options.groups.empty() ? default_groups() : options.groups, options);
  if (name == "extension")
    return oracle_groups(name,
                         {FiniteAbelianGroup::cyclic(4), FiniteAbelianGroup::cyclic(6),
                          FiniteAbelianGroup({2, 2})},
                         options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace fecount::verify
