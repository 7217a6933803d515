#include "pqtorsion/eisenstein.hpp"

#include <algorithm>

namespace pqtorsion {

namespace {

bool divides(OddPrime ell, Natural n) { return (n % ell.natural()).is_zero(); }

bool congruent_one(std::uint64_t x, OddPrime ell) { return x % ell.value() == 1; }

// ell | numerator((a-1)/3) and b^((a-1)/ell) = 1 mod a. The guard implies
// ell | a - 1, so the residue is only evaluated when its exponent is integral.
bool residue_disjunct(std::uint64_t a, std::uint64_t b, OddPrime ell) {
  if (!divides(ell, numerator_of_fraction(Natural{a} - 1, 3))) return false;
  return power_residue_holds(b, a, ell);
}

bool plus_one_numerator(std::uint64_t lhs, std::uint64_t rhs, OddPrime ell) {
  const Natural r{rhs};
  const Natural denom = gcd(3, r * (r + 1));
  return divides(ell, numerator_of_fraction(Natural{lhs} + 1, denom));
}

IdealVerdict from_trace(IdealId id, OddPrime ell, std::vector<TraceEntry> trace) {
  const bool any = std::any_of(trace.begin(), trace.end(), [](const TraceEntry& e) { return e.holds; });
  return {.ideal = id, .ell = ell.value(), .maximal = any, .trace = std::move(trace)};
}

}  // namespace

std::string_view ideal_name(IdealId id) noexcept {
  switch (id) {
    case IdealId::M1: return "m1";
    case IdealId::M2: return "m2";
    case IdealId::M3: return "m3";
    case IdealId::M4: return "m4";
  }
  return "?";
}

std::string_view ideal_generators(IdealId id) noexcept {
  switch (id) {
    case IdealId::M1: return "(U_p-1, U_q-1, I_0)";
    case IdealId::M2: return "(U_p+1, U_q+1, I_0)";
    case IdealId::M3: return "(U_p-1, U_q+1, I_0)";
    case IdealId::M4: return "(U_p+1, U_q-1, I_0)";
  }
  return "?";
}

bool IdealVerdict::fired(std::string_view condition) const {
  return std::any_of(trace.begin(), trace.end(),
                     [&](const TraceEntry& e) { return e.holds && e.condition == condition; });
}

IdealVerdict m1_maximal(const PrimePair& pair, OddPrime ell) {
  const auto p = pair.p();
  const auto q = pair.q();
  return from_trace(IdealId::M1, ell,
                    {
                        {std::string(condition::kBothCongruentOne), congruent_one(p, ell) && congruent_one(q, ell)},
                        {std::string(condition::kPSideResidue), residue_disjunct(p, q, ell)},
                        {std::string(condition::kQSideResidue), residue_disjunct(q, p, ell)},
                    });
}

IdealVerdict m2_maximal(const PrimePair&, OddPrime ell) {
  return {.ideal = IdealId::M2, .ell = ell.value(), .maximal = false, .trace = {}};
}

IdealVerdict m3_maximal(const PrimePair& pair, OddPrime ell) {
  return from_trace(IdealId::M3, ell,
                    {{std::string(condition::kQPlusOneNumerator), plus_one_numerator(pair.q(), pair.p(), ell)}});
}

IdealVerdict m4_maximal(const PrimePair& pair, OddPrime ell) {
  return from_trace(IdealId::M4, ell,
                    {{std::string(condition::kPPlusOneNumerator), plus_one_numerator(pair.p(), pair.q(), ell)}});
}

bool skorobogatov_nonzero(const PrimePair& pair, OddPrime ell) {
  return plus_one_numerator(pair.q(), pair.p(), ell);
}

std::array<IdealVerdict, 4> classify(const PrimePair& pair, OddPrime ell) {
  return {m1_maximal(pair, ell), m2_maximal(pair, ell), m3_maximal(pair, ell), m4_maximal(pair, ell)};
}

}  // namespace pqtorsion
