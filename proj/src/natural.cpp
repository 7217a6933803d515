#include "pqtorsion/natural.hpp"

#include <algorithm>

namespace pqtorsion {

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  u128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("invalid digit in integer literal '" + std::string(text) + "'");
    u128 next = 0;
    if (__builtin_mul_overflow(v, u128{10}, &next) ||
        __builtin_add_overflow(next, u128(c - '0'), &next)) {
      throw OverflowError("integer literal exceeds 128 bits: " + std::string(text));
    }
    v = next;
  }
  return from_u128(v);
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw OverflowError("value " + to_string() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(value_);
}

std::string Natural::to_string() const {
  if (value_ == 0) return "0";
  std::string out;
  for (u128 v = value_; v != 0; v /= 10) out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  std::reverse(out.begin(), out.end());
  return out;
}

Natural operator+(Natural a, Natural b) {
  u128 r = 0;
  if (__builtin_add_overflow(a.value_, b.value_, &r)) {
    throw OverflowError("addition overflows 128 bits: " + a.to_string() + " + " + b.to_string());
  }
  return Natural::from_u128(r);
}

Natural operator-(Natural a, Natural b) {
  if (b.value_ > a.value_) {
    throw OverflowError("subtraction underflows: " + a.to_string() + " - " + b.to_string());
  }
  return Natural::from_u128(a.value_ - b.value_);
}

Natural operator*(Natural a, Natural b) {
  u128 r = 0;
  if (__builtin_mul_overflow(a.value_, b.value_, &r)) {
    throw OverflowError("multiplication overflows 128 bits: " + a.to_string() + " * " + b.to_string());
  }
  return Natural::from_u128(r);
}

Natural operator/(Natural a, Natural b) {
  if (b.value_ == 0) throw DomainError("division by zero");
  return Natural::from_u128(a.value_ / b.value_);
}

Natural operator%(Natural a, Natural b) {
  if (b.value_ == 0) throw DomainError("remainder by zero");
  return Natural::from_u128(a.value_ % b.value_);
}

}  // namespace pqtorsion
