#include "pqtorsion/torsion.hpp"

#include <algorithm>

namespace pqtorsion {

namespace {

bool congruent_one(std::uint64_t x, std::uint64_t ell) { return x % ell == 1; }

bool congruent_and_residue(std::uint64_t a, std::uint64_t b, OddPrime ell) {
  return congruent_one(a, ell.value()) && power_residue_holds(b, a, ell);
}

}  // namespace

std::string_view status_name(CertificateStatus s) noexcept {
  return s == CertificateStatus::Certified ? "Certified" : "NotCertified";
}

TorsionCertificate certify(const PrimePair& pair, OddPrime ell) {
  const auto p = pair.p();
  const auto q = pair.q();
  TorsionCertificate cert{.ell = ell.value(), .status = CertificateStatus::Certified, .conditions = {}};
  if (ell.value() == 3) {
    const bool divides = (p - 1) % 3 == 0 || (q - 1) % 3 == 0;
    cert.conditions.push_back({std::string(condition::kThreeDividesProduct), divides});
  } else {
    cert.conditions = {
        {std::string(condition::kBothCongruentOne), congruent_one(p, ell.value()) && congruent_one(q, ell.value())},
        {std::string(condition::kPCongruentAndResidue), congruent_and_residue(p, q, ell)},
        {std::string(condition::kQCongruentAndResidue), congruent_and_residue(q, p, ell)},
    };
  }
  if (std::any_of(cert.conditions.begin(), cert.conditions.end(), [](const TraceEntry& e) { return e.holds; })) {
    cert.status = CertificateStatus::NotCertified;
  }
  return cert;
}

std::vector<std::uint64_t> exceptional_primes(const PrimePair& pair) {
  const Natural product = (Natural{pair.p()} - 1) * (Natural{pair.q()} - 1);
  std::vector<std::uint64_t> candidates = odd_prime_divisors(product);
  if (std::find(candidates.begin(), candidates.end(), 3) == candidates.end()) {
    candidates.insert(candidates.begin(), 3);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t ell : candidates) {
    if (certify(pair, OddPrime{ell}).status == CertificateStatus::NotCertified) out.push_back(ell);
  }
  return out;
}

}  // namespace pqtorsion
