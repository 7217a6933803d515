#include "pqtorsion/arithmetic.hpp"

#include <array>
#include <string>

namespace pqtorsion {

namespace {

// (a * b) mod m without overflow. Fast path when the modulus fits 64 bits.
u128 mul_mod(u128 a, u128 b, u128 m) {
  if (m >> 64 == 0) return (a % m) * (b % m) % m;
  a %= m;
  b %= m;
  u128 result = 0;
  while (b != 0) {
    if (b & 1) result = (result >= m - a) ? result - (m - a) : result + a;
    a = (a >= m - a) ? a - (m - a) : a + a;
    b >>= 1;
  }
  return result;
}

u128 pow_mod(u128 base, u128 exp, u128 m) {
  u128 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to a single base; n odd, n > base.
bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u128 x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

void require_prime(Natural r, const char* what) {
  if (!is_prime(r)) throw DomainError(std::string(what) + ": " + r.to_string() + " is not prime");
}

}  // namespace

OddPrime::OddPrime(Natural value) : value_(0) {
  if (!is_prime(value) || value.is_even()) {
    throw DomainError("ell = " + value.to_string() + " is not an odd prime");
  }
  value_ = value.to_u64();
}

bool is_prime(Natural n) {
  if (!n.fits_u64()) {
    throw DomainError("primality of " + n.to_string() + " is outside the deterministic 64-bit range");
  }
  const std::uint64_t v = n.to_u64();
  // The first twelve primes as witnesses are deterministic below 3.3 * 10^24.
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (v < 2) return false;
  for (std::uint64_t w : kWitnesses) {
    if (v == w) return true;
    if (v % w == 0) return false;
  }
  if (v < 41 * 41) return true;
  for (std::uint64_t w : kWitnesses) {
    if (!strong_probable_prime(v, w)) return false;
  }
  return true;
}

Natural mod_pow(Natural base, Natural exponent, Natural modulus) {
  if (modulus < Natural{2}) throw DomainError("mod_pow: modulus must be at least 2");
  return Natural::from_u128(pow_mod(base.value(), exponent.value(), modulus.value()));
}

Natural gcd(Natural a, Natural b) noexcept {
  u128 x = a.value();
  u128 y = b.value();
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return Natural::from_u128(x);
}

unsigned valuation(OddPrime ell, Natural n) {
  if (n.is_zero()) throw DomainError("valuation of 0 is infinite");
  const u128 l = ell.value();
  u128 v = n.value();
  unsigned k = 0;
  while (v % l == 0) {
    v /= l;
    ++k;
  }
  return k;
}

Natural odd_part(Natural n) {
  if (n.is_zero()) throw DomainError("odd part of 0 is undefined");
  u128 v = n.value();
  while ((v & 1) == 0) v >>= 1;
  return Natural::from_u128(v);
}

Natural numerator_of_fraction(Natural n, Natural d) {
  if (n.is_zero() || d.is_zero()) throw DomainError("numerator_of_fraction requires n >= 1 and d >= 1");
  return n / gcd(n, d);
}

int character_minus4(Natural r) {
  require_prime(r, "character_minus4");
  if (r == Natural{2}) return 0;
  return (r.value() % 4 == 1) ? 1 : -1;
}

int character_minus3(Natural r) {
  require_prime(r, "character_minus3");
  if (r == Natural{3}) return 0;
  return (r.value() % 3 == 1) ? 1 : -1;
}

bool power_residue_holds(Natural a, Natural p, OddPrime ell) {
  if (!is_prime(p)) throw PreconditionError("power_residue_holds: p = " + p.to_string() + " is not prime");
  const Natural pm1 = p - Natural{1};
  if (!(pm1 % ell.natural()).is_zero()) {
    throw PreconditionError("power_residue_holds: ell = " + ell.natural().to_string() +
                            " does not divide p - 1 = " + pm1.to_string());
  }
  if ((a % p).is_zero()) {
    throw PreconditionError("power_residue_holds: p = " + p.to_string() + " divides a = " + a.to_string());
  }
  return mod_pow(a, pm1 / ell.natural(), p) == Natural{1};
}

std::vector<std::uint64_t> odd_prime_divisors(Natural n) {
  if (n.is_zero()) throw DomainError("odd_prime_divisors of 0 is undefined");
  std::vector<std::uint64_t> out;
  u128 v = odd_part(n).value();
  for (u128 d = 3; d * d <= v; d += 2) {
    if (v % d != 0) continue;
    out.push_back(static_cast<std::uint64_t>(d));
    while (v % d == 0) v /= d;
  }
  if (v > 1) {
    if (v >> 64 != 0) throw OverflowError("odd_prime_divisors: cofactor exceeds 64 bits");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 3; i <= bound; i += 2) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += 2 * i) composite[j] = true;
  }
  return out;
}

}  // namespace pqtorsion
