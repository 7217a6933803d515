#include "pqtorsion/cuspidal.hpp"

#include <algorithm>

namespace pqtorsion {

namespace {

// Smallest prime factor of a prime power, or 0 if n is not one.
u128 prime_power_base(u128 n) {
  if (n < 2) return 0;
  u128 base = n;
  for (u128 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      base = d;
      break;
    }
  }
  while (n % base == 0) n /= base;
  return n == 1 ? base : 0;
}

bool three_divides_product(const PrimePair& pair) {
  return (pair.p() - 1) % 3 == 0 || (pair.q() - 1) % 3 == 0;
}

bool ell_primary_hypotheses(const PrimePair& pair, OddPrime ell) {
  return ell.value() == 3 ? !three_divides_product(pair) : s_ell_member(pair, ell);
}

}  // namespace

GroupStructure::GroupStructure(std::vector<Natural> factors) : factors_(std::move(factors)) {
  for (const Natural& f : factors_) {
    if (prime_power_base(f.value()) == 0) {
      throw DomainError("group factor " + f.to_string() + " is not a nontrivial prime power");
    }
  }
  std::sort(factors_.begin(), factors_.end());
}

GroupStructure GroupStructure::cyclic(std::uint64_t prime, unsigned exponent) {
  if (!is_prime(prime)) throw DomainError("cyclic factor base " + std::to_string(prime) + " is not prime");
  GroupStructure g;
  if (exponent == 0) return g;
  Natural order{1};
  for (unsigned i = 0; i < exponent; ++i) order *= prime;
  g.factors_.push_back(order);
  return g;
}

Natural GroupStructure::order() const {
  Natural n{1};
  for (const Natural& f : factors_) n *= f;
  return n;
}

std::string GroupStructure::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (const Natural& f : factors_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + f.to_string();
  }
  return out;
}

GroupStructure& GroupStructure::operator+=(const GroupStructure& other) {
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  std::sort(factors_.begin(), factors_.end());
  return *this;
}

CuspidalOrders cuspidal_orders(const PrimePair& pair) {
  const Natural p{pair.p()};
  const Natural q{pair.q()};
  // (p-1)(q^2-1) and (q-1)(p^2-1), divided by 3 in lowest terms, up to powers of 2.
  const Natural cp = (p - 1) * (q * q - 1);
  const Natural cq = (q - 1) * (p * p - 1);
  return {.order_cp_odd = odd_part(numerator_of_fraction(cp, 3)),
          .order_cq_odd = odd_part(numerator_of_fraction(cq, 3))};
}

bool s_ell_member(const PrimePair& pair, OddPrime ell) {
  const auto p = pair.p();
  const auto q = pair.q();
  const auto l = ell.value();
  if (l == 3) return !three_divides_product(pair);
  if ((p - 1) % l == 0 && (q - 1) % l == 0) return false;
  if (p % l == 1 && power_residue_holds(q, p, ell)) return false;
  if (q % l == 1 && power_residue_holds(p, q, ell)) return false;
  return true;
}

EllPrimaryCuspidal ell_primary_cuspidal(const PrimePair& pair, OddPrime ell) {
  if (!ell_primary_hypotheses(pair, ell)) return {};
  const auto orders = cuspidal_orders(pair);
  return {.known = true, .a = valuation(ell, orders.order_cp_odd), .b = valuation(ell, orders.order_cq_odd)};
}

std::optional<GroupStructure> new_quotient_image(const PrimePair& pair, OddPrime ell) {
  if (!ell_primary_hypotheses(pair, ell)) return std::nullopt;
  unsigned m = valuation(ell, Natural{pair.p()} + 1);
  unsigned n = valuation(ell, Natural{pair.q()} + 1);
  if (ell.value() == 3) {
    m = m > 0 ? m - 1 : 0;
    n = n > 0 ? n - 1 : 0;
  }
  return GroupStructure::cyclic(ell.value(), m) + GroupStructure::cyclic(ell.value(), n);
}

GroupStructure kernel_subgroup(const PrimePair& pair) {
  GroupStructure d;
  const Natural plus = (Natural{pair.p()} + 1) * (Natural{pair.q()} + 1);
  for (std::uint64_t l : odd_prime_divisors(plus)) {
    const OddPrime ell{l};
    if (!s_ell_member(pair, ell)) continue;
    if (auto image = new_quotient_image(pair, ell)) d += *image;
  }
  return d;
}

}  // namespace pqtorsion
