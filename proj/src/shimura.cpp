#include "pqtorsion/shimura.hpp"

#include "pqtorsion/arithmetic.hpp"

namespace pqtorsion {

PrimePair::PrimePair(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
  if (!is_prime(Natural{p})) throw InvalidPairError("invalid pair: p = " + std::to_string(p) + " is not prime");
  if (!is_prime(Natural{q})) throw InvalidPairError("invalid pair: q = " + std::to_string(q) + " is not prime");
  if (p == q) throw InvalidPairError("invalid pair: p and q must be distinct (both are " + std::to_string(p) + ")");
}

std::string PrimePair::to_string() const {
  return "(" + std::to_string(p_) + ", " + std::to_string(q_) + ")";
}

EllipticPointCounts elliptic_point_counts(const PrimePair& pair) {
  const auto local = [](int chi) { return static_cast<std::uint64_t>(1 - chi); };
  return {
      .e2 = local(character_minus4(pair.p())) * local(character_minus4(pair.q())),
      .e3 = local(character_minus3(pair.p())) * local(character_minus3(pair.q())),
  };
}

GenusReport genus(const PrimePair& pair) {
  const auto [e2, e3] = elliptic_point_counts(pair);
  const Natural phi = (Natural{pair.p()} - 1) * (Natural{pair.q()} - 1);
  const Natural positive = Natural{12} + phi;
  const Natural correction = Natural{3 * e2 + 4 * e3};
  if (correction > positive || !((positive - correction) % 12).is_zero()) {
    throw InternalError("genus formula is not a nonnegative integer for " + pair.to_string());
  }
  return {.e2 = e2, .e3 = e3, .genus = ((positive - correction) / 12).to_u64()};
}

}  // namespace pqtorsion
