#include "fecount/big_count.hpp"

#include <stdexcept>

namespace fecount {

BigCount::BigCount(Integer v) : value_(std::move(v)) {
  if (value_ < 0) throw std::invalid_argument("BigCount must be nonnegative");
}

BigCount BigCount::infinite() {
  BigCount c;
  c.infinite_ = true;
  return c;
}

const Integer& BigCount::value() const {
  if (infinite_) throw std::logic_error("value() called on an infinite count");
  return value_;
}

std::string BigCount::to_string() const {
  return infinite_ ? std::string("infinite") : value_.str();
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
  if (infinite_ || rhs.infinite_) return *this = infinite();
  value_ += rhs.value_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
  if (infinite_ || rhs.infinite_) return *this = infinite();
  value_ *= rhs.value_;
  return *this;
}

BigCount BigCount::pow(std::uint64_t exponent) const {
  if (infinite_) return infinite();
  Integer result = 1;
  Integer base = value_;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return BigCount(std::move(result));
}

std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) noexcept {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_string(); }

}  // namespace fecount
