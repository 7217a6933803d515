#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code with the library: they use plain uint64_t loops and direct
// enumeration so they stay independent of the paths they check.

#include <cstdint>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  // Subtractive form, deliberately unlike the library's remainder loop.
  if (a == 0) return b;
  if (b == 0) return a;
  while (a != b) {
    if (a > b) a -= b;
    else b -= a;
  }
  return a;
}

// Repeated multiplication, exp steps.
inline std::uint64_t naive_pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  for (std::uint64_t i = 0; i < exp; ++i) r = r * (base % mod) % mod;
  return r;
}

inline unsigned valuation(std::uint64_t ell, std::uint64_t n) {
  unsigned k = 0;
  std::uint64_t power = ell;
  while (n % power == 0) {
    ++k;
    power *= ell;
  }
  return k;
}

inline std::uint64_t odd_part(std::uint64_t n) {
  std::uint64_t best = 1;
  for (std::uint64_t d = 1; d <= n; d *= 2) {
    if (n % d == 0) best = n / d;
  }
  return best;
}

// Reduce n/d by every common divisor, found by trial.
inline std::uint64_t numerator(std::uint64_t n, std::uint64_t d) {
  for (std::uint64_t k = 2; k <= n && k <= d;) {
    if (n % k == 0 && d % k == 0) {
      n /= k;
      d /= k;
    } else {
      ++k;
    }
  }
  return n;
}

// Number of roots of x^2 + 1 mod r. Equals 1 + (-4/r).
inline std::uint64_t roots_of_x2_plus_1(std::uint64_t r) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < r; ++x) c += (x * x + 1) % r == 0;
  return c;
}

// Number of roots of x^2 + x + 1 mod r. Equals 1 + (-3/r).
inline std::uint64_t roots_of_x2_plus_x_plus_1(std::uint64_t r) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < r; ++x) c += (x * x + x + 1) % r == 0;
  return c;
}

// Local factor 1 - chi(r), from root counts.
inline std::int64_t local_factor(std::uint64_t roots) { return 2 - static_cast<std::int64_t>(roots); }

struct Genus {
  std::uint64_t e2;
  std::uint64_t e3;
  std::int64_t genus_times_12;
};

// Elliptic counts from root enumeration, genus kept as 12*g to expose non-integrality.
inline Genus genus(std::uint64_t p, std::uint64_t q) {
  const auto e2 = static_cast<std::uint64_t>(local_factor(roots_of_x2_plus_1(p)) * local_factor(roots_of_x2_plus_1(q)));
  const auto e3 = static_cast<std::uint64_t>(local_factor(roots_of_x2_plus_x_plus_1(p)) *
                                             local_factor(roots_of_x2_plus_x_plus_1(q)));
  const auto twelve_g = 12 + static_cast<std::int64_t>((p - 1) * (q - 1)) - 3 * static_cast<std::int64_t>(e2) -
                        4 * static_cast<std::int64_t>(e3);
  return {e2, e3, twelve_g};
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

}  // namespace oracle
