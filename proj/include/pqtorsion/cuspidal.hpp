#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqtorsion/arithmetic.hpp"
#include "pqtorsion/shimura.hpp"

namespace pqtorsion {

/// Finite abelian group as a sorted multiset of prime-power cyclic orders.
/// The trivial group has no factors.
class GroupStructure {
 public:
  GroupStructure() = default;

  /// Throws DomainError if a factor is not a prime power >= 2.
  explicit GroupStructure(std::vector<Natural> factors);

  /// Z/prime^exponent; trivial when exponent = 0.
  static GroupStructure cyclic(std::uint64_t prime, unsigned exponent);

  [[nodiscard]] std::span<const Natural> factors() const noexcept { return factors_; }
  [[nodiscard]] Natural order() const;
  [[nodiscard]] bool trivial() const noexcept { return factors_.empty(); }

  /// "Z/3 + Z/7", or "0" for the trivial group.
  [[nodiscard]] std::string to_string() const;

  GroupStructure& operator+=(const GroupStructure& other);
  friend GroupStructure operator+(GroupStructure a, const GroupStructure& b) { return a += b; }
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;

 private:
  std::vector<Natural> factors_;
};

/// Odd parts of the orders of C_p = [P_1 - P_p] and C_q = [P_1 - P_q].
struct CuspidalOrders {
  Natural order_cp_odd;
  Natural order_cq_odd;

  friend bool operator==(const CuspidalOrders&, const CuspidalOrders&) = default;
};

/// C_ell(pq) = Z/ell^a + Z/ell^b when known.
struct EllPrimaryCuspidal {
  bool known = false;
  unsigned a = 0;
  unsigned b = 0;

  friend bool operator==(const EllPrimaryCuspidal&, const EllPrimaryCuspidal&) = default;
};

[[nodiscard]] CuspidalOrders cuspidal_orders(const PrimePair& pair);

/// Membership of (p, q) in S_ell: the three hypotheses for ell >= 5, or
/// 3 not dividing (p-1)(q-1) for ell = 3.
[[nodiscard]] bool s_ell_member(const PrimePair& pair, OddPrime ell);

[[nodiscard]] EllPrimaryCuspidal ell_primary_cuspidal(const PrimePair& pair, OddPrime ell);

/// pi(C_ell(pq)) in the new quotient, or nullopt outside the hypotheses.
[[nodiscard]] std::optional<GroupStructure> new_quotient_image(const PrimePair& pair,
                                                               OddPrime ell);

/// D(pq): direct sum of pi(C_ell(pq)) over odd ell with (p, q) in S_ell.
[[nodiscard]] GroupStructure kernel_subgroup(const PrimePair& pair);

}  // namespace pqtorsion
