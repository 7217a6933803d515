#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pqtorsion/torsion.hpp"

using namespace pqtorsion;

namespace {

bool not_certified(const PrimePair& pair, std::uint64_t l) {
  return certify(pair, OddPrime{l}).status == CertificateStatus::NotCertified;
}

}  // namespace

TEST_CASE("certify examples") {
  CHECK(certify({2, 7}, OddPrime{5}).status == CertificateStatus::Certified);

  const auto three = certify({2, 7}, OddPrime{3});
  CHECK(three.status == CertificateStatus::NotCertified);
  REQUIRE(three.conditions.size() == 1);
  CHECK(three.conditions[0].condition == condition::kThreeDividesProduct);

  const auto five = certify({11, 31}, OddPrime{5});
  CHECK(five.status == CertificateStatus::NotCertified);
  CHECK(five.conditions[0].condition == condition::kBothCongruentOne);
  CHECK(five.conditions[0].holds);
}

TEST_CASE("exceptional primes") {
  CHECK(exceptional_primes({2, 7}) == std::vector<std::uint64_t>{3});
  CHECK(exceptional_primes({2, 17}).empty());
  CHECK(exceptional_primes({11, 31}) == std::vector<std::uint64_t>{3, 5});
}

TEST_CASE("certify coincides with m1 for ell >= 5, and is swap-symmetric") {
  const auto primes = oracle::primes_up_to(199);
  const auto ells = oracle::primes_up_to(99);
  for (auto p : primes) {
    for (auto q : primes) {
      if (p == q) continue;
      const PrimePair pair(p, q);
      for (auto l : ells) {
        if (l < 3) continue;
        const bool nc = not_certified(pair, l);
        REQUIRE(nc == not_certified(pair.swapped(), l));
        if (l >= 5) {
          REQUIRE(nc == m1_maximal(pair, OddPrime{l}).maximal);
          if (((p - 1) * (q - 1)) % l != 0) REQUIRE_FALSE(nc);
        }
      }
    }
  }
}

TEST_CASE("exceptional primes equal exhaustive certification for p, q < 50") {
  const auto primes = oracle::primes_up_to(49);
  for (auto p : primes) {
    for (auto q : primes) {
      if (p == q) continue;
      const PrimePair pair(p, q);
      std::vector<std::uint64_t> expected;
      const std::uint64_t limit = std::max<std::uint64_t>(3, (p - 1) * (q - 1));
      for (std::uint64_t l = 3; l <= limit; l += 2) {
        if (oracle::is_prime(l) && not_certified(pair, l)) expected.push_back(l);
      }
      REQUIRE(exceptional_primes(pair) == expected);
    }
  }
}
