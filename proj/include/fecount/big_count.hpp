#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fecount {

using Integer = boost::multiprecision::cpp_int;

/// Exact nonnegative count, or the distinguished value Infinite.
///
/// Finite arithmetic is exact. Any operation with an Infinite operand
/// yields Infinite.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(Integer v);

  static BigCount infinite();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_.is_zero(); }

  /// Throws std::logic_error on Infinite.
  const Integer& value() const;

  /// Decimal digits, or "infinite".
  std::string to_string() const;

  BigCount& operator+=(const BigCount& rhs);
  BigCount& operator*=(const BigCount& rhs);
  BigCount pow(std::uint64_t exponent) const;

  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

  friend bool operator==(const BigCount& a, const BigCount& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  /// Infinite compares greater than every finite count.
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) noexcept;

 private:
  Integer value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

}  // namespace fecount
