// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pqtorsion/cuspidal.hpp"
#include "pqtorsion/eisenstein.hpp"
#include "pqtorsion/serialize.hpp"
#include "pqtorsion/survey.hpp"
#include "pqtorsion/torsion.hpp"

using namespace pqtorsion;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Every (p, q, ell) with p != q prime below 200 and odd prime ell below 50.
void for_each_sweep_triple(const std::function<void(const PrimePair&, OddPrime)>& f) {
  const auto primes = oracle::primes_up_to(199);
  const auto ells = odd_primes_up_to(49);
  for (auto p : primes) {
    for (auto q : primes) {
      if (p == q) continue;
      const PrimePair pair(p, q);
      for (auto l : ells) f(pair, OddPrime{l});
    }
  }
}

Outcome table1_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto result = table1();
  const double elapsed = seconds_since(t0);

  const auto fixture = table1_fixture();
  std::set<std::pair<std::uint64_t, std::uint64_t>> published;
  for (const auto& f : fixture) published.emplace(f.p, f.q);
  std::set<std::pair<std::uint64_t, std::uint64_t>> swept;
  for (const auto& r : result.rows) swept.emplace(r.pair.p(), r.pair.q());

  std::size_t cells = 0;
  std::size_t cell_mismatches = 0;
  for (const auto& f : fixture) {
    const auto it = std::find_if(result.rows.begin(), result.rows.end(), [&](const TableRow& r) {
      return r.pair.p() == f.p && r.pair.q() == f.q;
    });
    const TableRow row = it != result.rows.end() ? *it : compute_row({f.p, f.q});
    cells += 5;
    cell_mismatches += (row.genus != f.genus) + (row.in_s3 != f.in_s3) + (row.in_s5 != f.in_s5) +
                       (row.in_s7 != f.in_s7) + (row.d_order != Natural{f.d_order});
  }
  if (cell_mismatches != 0) {
    o.fail(std::to_string(cell_mismatches) + " of " + std::to_string(cells) + " published cells differ");
  }
  if (swept != published) {
    std::string extra;
    for (const auto& pq : swept) {
      if (!published.contains(pq)) extra += " (" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
    }
    std::string missing;
    for (const auto& pq : published) {
      if (!swept.contains(pq)) missing += " (" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
    }
    o.fail("genus<=3 sweep gives " + std::to_string(swept.size()) + " pairs, published 17; extra:" +
           (extra.empty() ? " none" : extra) + "; missing:" + (missing.empty() ? " none" : missing) +
           "; all " + std::to_string(cells) + " published cells match");
  }
  if (elapsed >= 1.0) o.fail("runtime " + std::to_string(elapsed) + " s >= 1 s");
  if (o.pass) o.detail = "17 pairs, " + std::to_string(cells) + " cells exact";
  return o;
}

Outcome two_group_quotient() {
  Outcome o;
  for (const auto& f : table1_fixture()) {
    const Natural d = kernel_subgroup({f.p, f.q}).order();
    const Natural k{f.k_order};
    if (!(k % d).is_zero() || !is_power_of_two(k / d)) {
      o.fail("#K/#D not a power of 2 at (" + std::to_string(f.p) + "," + std::to_string(f.q) + ")");
    }
  }
  if (o.pass) o.detail = "17 rows";
  return o;
}

Outcome genus_integrality() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto primes = oracle::primes_up_to(499);
  std::size_t n = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const auto p = primes[i];
      const auto q = primes[j];
      const auto g = genus({p, q});
      ++n;
      const auto lhs = 12 * (static_cast<std::int64_t>(g.genus) - 1) + 3 * static_cast<std::int64_t>(g.e2) +
                       4 * static_cast<std::int64_t>(g.e3);
      if (lhs != static_cast<std::int64_t>((p - 1) * (q - 1))) o.fail("identity fails at " + PrimePair(p, q).to_string());
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 5.0) o.fail("runtime " + std::to_string(elapsed) + " s >= 5 s");
  if (o.pass) o.detail = std::to_string(n) + " pairs";
  return o;
}

Outcome m2_never_maximal() {
  Outcome o;
  std::size_t n = 0;
  for_each_sweep_triple([&](const PrimePair& pair, OddPrime ell) {
    ++n;
    if (classify(pair, ell)[1].maximal) o.fail("m2 maximal at " + pair.to_string());
  });
  if (o.pass) o.detail = std::to_string(n) + " triples";
  return o;
}

Outcome skorobogatov_equivalence() {
  Outcome o;
  std::size_t n = 0;
  for_each_sweep_triple([&](const PrimePair& pair, OddPrime ell) {
    ++n;
    if (skorobogatov_nonzero(pair, ell) != m3_maximal(pair, ell).maximal) {
      o.fail("differs at " + pair.to_string() + " ell=" + std::to_string(ell.value()));
    }
  });
  if (o.pass) o.detail = std::to_string(n) + " triples";
  return o;
}

Outcome screen_ideal_consistency() {
  Outcome o;
  std::size_t n = 0;
  for_each_sweep_triple([&](const PrimePair& pair, OddPrime ell) {
    if (ell.value() < 5) return;
    ++n;
    const bool nc = certify(pair, ell).status == CertificateStatus::NotCertified;
    if (nc != m1_maximal(pair, ell).maximal) o.fail("differs at " + pair.to_string() + " ell=" + std::to_string(ell.value()));
  });
  if (o.pass) o.detail = std::to_string(n) + " triples";
  return o;
}

Outcome arithmetic_oracles() {
  Outcome o;
  constexpr int kSamples = 20000;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> small(1, 100000);
  std::uniform_int_distribution<std::uint64_t> mod(2, 1000);
  std::uniform_int_distribution<std::uint64_t> exp(0, 60);
  const auto ells = odd_primes_up_to(50);
  std::uniform_int_distribution<std::size_t> pick(0, ells.size() - 1);

  for (int i = 0; i < kSamples; ++i) {
    const auto m = mod(rng);
    const auto b = small(rng);
    const auto e = exp(rng);
    if (mod_pow(b, e, m) != Natural{oracle::naive_pow_mod(b, e, m)}) o.fail("mod_pow");

    const auto l = ells[pick(rng)];
    const auto n = small(rng);
    if (valuation(OddPrime{l}, n) != oracle::valuation(l, n)) o.fail("valuation");
    if (odd_part(n) != Natural{oracle::odd_part(n)}) o.fail("odd_part");
    const auto d = small(rng);
    if (numerator_of_fraction(n, d) != Natural{oracle::numerator(n, d)}) o.fail("numerator_of_fraction");
  }
  if (o.pass) o.detail = std::to_string(kSamples) + " samples per operation";
  return o;
}

Outcome symmetry_suite() {
  Outcome o;
  std::size_t n = 0;
  for_each_sweep_triple([&](const PrimePair& pair, OddPrime ell) {
    ++n;
    const PrimePair swapped = pair.swapped();
    if (genus(pair).genus != genus(swapped).genus) o.fail("genus at " + pair.to_string());
    if (m1_maximal(pair, ell).maximal != m1_maximal(swapped, ell).maximal) o.fail("m1 at " + pair.to_string());
    if (certify(pair, ell).status != certify(swapped, ell).status) o.fail("certify at " + pair.to_string());
    if (m3_maximal(pair, ell).maximal != m4_maximal(swapped, ell).maximal) o.fail("m3/m4 at " + pair.to_string());
  });
  if (o.pass) o.detail = std::to_string(n) + " triples";
  return o;
}

Outcome serialization_round_trip() {
  Outcome o;
  const auto rows = table1().rows;
  const std::string csv = to_csv(rows);
  const std::string json = to_json(parse_csv(csv));
  const auto back = parse_json(json);
  if (to_csv(back) != csv) o.fail("CSV text differs after CSV->JSON->CSV");
  if (back != rows) o.fail("row values differ after CSV->JSON->CSV");
  if (o.pass) o.detail = std::to_string(rows.size()) + " rows";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 table reproduction", table1_reproduction},
      {"2 K/D is a 2-group", two_group_quotient},
      {"3 genus integrality p<q<500", genus_integrality},
      {"4 m2 never maximal", m2_never_maximal},
      {"5 Skorobogatov <=> m3", skorobogatov_equivalence},
      {"6 certify <=> m1 (ell>=5)", screen_ideal_consistency},
      {"7 arithmetic oracles", arithmetic_oracles},
      {"8 swap symmetry", symmetry_suite},
      {"9 CSV->JSON->CSV round-trip", serialization_round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
