#pragma once

#include <cstdint>
#include <string>

#include "pqtorsion/natural.hpp"

namespace pqtorsion {

/// Ordered pair of distinct primes (p, q); pq is the quaternion discriminant.
class PrimePair {
 public:
  /// Throws InvalidPairError naming the first violated invariant.
  PrimePair(std::uint64_t p, std::uint64_t q);

  [[nodiscard]] constexpr std::uint64_t p() const noexcept { return p_; }
  [[nodiscard]] constexpr std::uint64_t q() const noexcept { return q_; }
  [[nodiscard]] PrimePair swapped() const { return {q_, p_}; }
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(const PrimePair&, const PrimePair&) noexcept = default;
  friend constexpr auto operator<=>(const PrimePair&, const PrimePair&) noexcept = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

struct EllipticPointCounts {
  std::uint64_t e2 = 0;
  std::uint64_t e3 = 0;

  friend constexpr bool operator==(const EllipticPointCounts&, const EllipticPointCounts&) = default;
};

struct GenusReport {
  std::uint64_t e2 = 0;
  std::uint64_t e3 = 0;
  std::uint64_t genus = 0;

  /// The downstream theorems all assume genus != 0.
  [[nodiscard]] constexpr bool genus_zero() const noexcept { return genus == 0; }
};

[[nodiscard]] EllipticPointCounts elliptic_point_counts(const PrimePair& pair);

/// Eichler's formula g = 1 + (p-1)(q-1)/12 - e2/4 - e3/3, evaluated as
/// 12g = 12 + (p-1)(q-1) - 3 e2 - 4 e3. Throws InternalError if that is not
/// a nonnegative multiple of 12.
[[nodiscard]] GenusReport genus(const PrimePair& pair);

}  // namespace pqtorsion
