#pragma once

#include <cstddef>
#include <cstdint>

namespace fecount {

/// Ceilings shared by the counting and enumeration entry points.
struct ResourceLimits {
  /// Largest n accepted by the O(n^2) counting tables.
  std::size_t max_n = 10'000;
  /// Upper bound on the number of candidate tuples an oracle may visit.
  std::uint64_t max_oracle_work = 100'000'000;
};

inline constexpr ResourceLimits kDefaultLimits{};

}  // namespace fecount
