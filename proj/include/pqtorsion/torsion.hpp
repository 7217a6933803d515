#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pqtorsion/eisenstein.hpp"

namespace pqtorsion {

/// NotCertified only means no proof of non-existence is available; it never
/// asserts that rational ell-torsion exists.
enum class CertificateStatus { Certified, NotCertified };

[[nodiscard]] std::string_view status_name(CertificateStatus s) noexcept;

struct TorsionCertificate {
  std::uint64_t ell = 0;
  CertificateStatus status = CertificateStatus::Certified;
  std::vector<TraceEntry> conditions;
};

namespace condition {
inline constexpr std::string_view kPCongruentAndResidue = "p-congruent-1-and-residue";
inline constexpr std::string_view kQCongruentAndResidue = "q-congruent-1-and-residue";
inline constexpr std::string_view kThreeDividesProduct = "three-divides-(p-1)(q-1)";
}  // namespace condition

/// Whether J^pq provably has no rational point of order ell.
[[nodiscard]] TorsionCertificate certify(const PrimePair& pair, OddPrime ell);

/// All odd primes ell with certify(pair, ell) = NotCertified, ascending.
[[nodiscard]] std::vector<std::uint64_t> exceptional_primes(const PrimePair& pair);

}  // namespace pqtorsion
