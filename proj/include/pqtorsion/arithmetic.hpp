#pragma once

#include <cstdint>
#include <vector>

#include "pqtorsion/natural.hpp"

namespace pqtorsion {

/// A prime >= 3. Construction validates with the deterministic primality test.
class OddPrime {
 public:
  explicit OddPrime(Natural value);

  [[nodiscard]] constexpr std::uint64_t value() const noexcept { return value_; }
  [[nodiscard]] Natural natural() const noexcept { return value_; }

  friend bool operator==(OddPrime, OddPrime) noexcept = default;
  friend auto operator<=>(OddPrime, OddPrime) noexcept = default;

 private:
  std::uint64_t value_;
};

/// Deterministic for n < 2^64; throws DomainError above that range.
[[nodiscard]] bool is_prime(Natural n);

/// base^exponent mod modulus. Throws DomainError if modulus < 2.
[[nodiscard]] Natural mod_pow(Natural base, Natural exponent, Natural modulus);

[[nodiscard]] Natural gcd(Natural a, Natural b) noexcept;

/// Largest k with ell^k | n. Throws DomainError for n = 0.
[[nodiscard]] unsigned valuation(OddPrime ell, Natural n);

/// n with every factor of 2 removed. Throws DomainError for n = 0.
[[nodiscard]] Natural odd_part(Natural n);

/// Numerator of n/d in lowest terms, n / gcd(n, d). Both arguments must be >= 1.
[[nodiscard]] Natural numerator_of_fraction(Natural n, Natural d);

/// Kronecker character of Q(i): 0 at 2, +1 for r = 1 mod 4, -1 for r = 3 mod 4.
[[nodiscard]] int character_minus4(Natural r);

/// Kronecker character of Q(sqrt(-3)): 0 at 3, +1 for r = 1 mod 3, -1 for r = 2 mod 3.
[[nodiscard]] int character_minus3(Natural r);

/// True iff a^((p-1)/ell) = 1 mod p. Requires p prime, ell | p - 1 and p not dividing a;
/// violations throw PreconditionError.
[[nodiscard]] bool power_residue_holds(Natural a, Natural p, OddPrime ell);

/// Distinct odd prime divisors of n in ascending order, by trial division.
[[nodiscard]] std::vector<std::uint64_t> odd_prime_divisors(Natural n);

/// Odd primes 3 <= ell <= bound, ascending.
[[nodiscard]] std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t bound);

/// n is 2^k for some k >= 0.
[[nodiscard]] constexpr bool is_power_of_two(Natural n) noexcept {
  return !n.is_zero() && (n.value() & (n.value() - 1)) == 0;
}

}  // namespace pqtorsion
