#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "pqtorsion/errors.hpp"

namespace pqtorsion {

using u128 = unsigned __int128;

/// Nonnegative integer bounded by 128 bits. Every operation is exact; any
/// result that would leave [0, 2^128) throws OverflowError instead of wrapping.
class Natural {
 public:
  constexpr Natural() noexcept = default;
  constexpr Natural(std::uint64_t v) noexcept : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Natural from_u128(u128 v) noexcept {
    Natural n;
    n.value_ = v;
    return n;
  }

  /// Parses a base-10 string. Throws ParseError on junk, OverflowError past 128 bits.
  static Natural parse(std::string_view text);

  [[nodiscard]] constexpr u128 value() const noexcept { return value_; }
  [[nodiscard]] constexpr bool fits_u64() const noexcept { return value_ >> 64 == 0; }
  [[nodiscard]] std::uint64_t to_u64() const;
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] constexpr bool is_zero() const noexcept { return value_ == 0; }
  [[nodiscard]] constexpr bool is_even() const noexcept { return (value_ & 1) == 0; }

  friend constexpr bool operator==(const Natural&, const Natural&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    return a.value_ <=> b.value_;
  }

  friend Natural operator+(Natural a, Natural b);
  friend Natural operator-(Natural a, Natural b);
  friend Natural operator*(Natural a, Natural b);
  friend Natural operator/(Natural a, Natural b);
  friend Natural operator%(Natural a, Natural b);

  Natural& operator+=(Natural b) { return *this = *this + b; }
  Natural& operator-=(Natural b) { return *this = *this - b; }
  Natural& operator*=(Natural b) { return *this = *this * b; }
  Natural& operator/=(Natural b) { return *this = *this / b; }

 private:
  u128 value_ = 0;
};

}  // namespace pqtorsion
