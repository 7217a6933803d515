#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pqtorsion/arithmetic.hpp"
#include "pqtorsion/shimura.hpp"

namespace pqtorsion {

/// The four Eisenstein ideals I_1..I_4 of the Hecke ring; m_i = (ell, I_i).
enum class IdealId { M1, M2, M3, M4 };

inline constexpr std::array<IdealId, 4> kAllIdeals = {IdealId::M1, IdealId::M2, IdealId::M3,
                                                      IdealId::M4};

[[nodiscard]] std::string_view ideal_name(IdealId id) noexcept;

/// Generators of I_i, e.g. "(U_p-1, U_q-1, I_0)". Documentation only; the
/// Hecke ring itself is never computed.
[[nodiscard]] std::string_view ideal_generators(IdealId id) noexcept;

struct TraceEntry {
  std::string condition;
  bool holds = false;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct IdealVerdict {
  IdealId ideal = IdealId::M1;
  std::uint64_t ell = 0;
  bool maximal = false;
  std::vector<TraceEntry> trace;

  [[nodiscard]] bool fired(std::string_view condition) const;
};

namespace condition {
inline constexpr std::string_view kBothCongruentOne = "both-congruent-1";
inline constexpr std::string_view kPSideResidue = "p-side-residue";
inline constexpr std::string_view kQSideResidue = "q-side-residue";
inline constexpr std::string_view kQPlusOneNumerator = "ell-divides-numerator-(q+1)/gcd(3,p(p+1))";
inline constexpr std::string_view kPPlusOneNumerator = "ell-divides-numerator-(p+1)/gcd(3,q(q+1))";
}  // namespace condition

[[nodiscard]] IdealVerdict m1_maximal(const PrimePair& pair, OddPrime ell);
[[nodiscard]] IdealVerdict m2_maximal(const PrimePair& pair, OddPrime ell);
[[nodiscard]] IdealVerdict m3_maximal(const PrimePair& pair, OddPrime ell);
[[nodiscard]] IdealVerdict m4_maximal(const PrimePair& pair, OddPrime ell);

/// S_q[ell] != 0 for the Skorobogatov subgroup at q.
[[nodiscard]] bool skorobogatov_nonzero(const PrimePair& pair, OddPrime ell);

/// Verdicts for m_1..m_4 in order.
[[nodiscard]] std::array<IdealVerdict, 4> classify(const PrimePair& pair, OddPrime ell);

}  // namespace pqtorsion
