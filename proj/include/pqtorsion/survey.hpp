#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqtorsion/cuspidal.hpp"
#include "pqtorsion/eisenstein.hpp"
#include "pqtorsion/shimura.hpp"
#include "pqtorsion/torsion.hpp"

namespace pqtorsion {

struct TableRow {
  PrimePair pair;
  std::uint64_t genus = 0;
  bool in_s3 = false;
  bool in_s5 = false;
  bool in_s7 = false;
  Natural d_order{1};
  GroupStructure d_structure;
  std::optional<Natural> k_order_fixture;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Computes every column except the #K fixture.
[[nodiscard]] TableRow compute_row(const PrimePair& pair);

/// One published row of the low-genus table, including #K(pq) from the
/// explicit isogeny computation. #K is data, never computed here.
struct FixtureRow {
  std::uint64_t p;
  std::uint64_t q;
  std::uint64_t genus;
  bool in_s3;
  bool in_s5;
  bool in_s7;
  std::uint64_t d_order;
  std::uint64_t k_order;
};

[[nodiscard]] std::span<const FixtureRow> table1_fixture() noexcept;

struct Table1Result {
  /// Sweep rows (1 <= genus <= 3, p < q) in (p, q) order, with fixture #K attached where published.
  std::vector<TableRow> rows;
  /// Cell-by-cell differences between the sweep and the fixture; empty on full agreement.
  std::vector<std::string> mismatches;

  [[nodiscard]] bool all_match() const noexcept { return mismatches.empty(); }
};

/// Largest q that can occur in a pair with genus <= 3: (p-1)(q-1) <= 24 + 3*4 + 4*4.
inline constexpr std::uint64_t kLowGenusPrimeBound = 53;

[[nodiscard]] Table1Result table1();

struct ScanOptions {
  std::uint64_t p_max = 2;
  std::uint64_t q_max = 2;
  /// When set, keep only pairs with 1 <= genus <= genus_max.
  std::optional<std::uint64_t> genus_max;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Rows for every prime pair p < q with p <= p_max, q <= q_max, in (p, q) order.
[[nodiscard]] std::vector<TableRow> scan(const ScanOptions& options);

struct EllAnalysis {
  std::uint64_t ell = 0;
  std::array<IdealVerdict, 4> verdicts;
  bool skorobogatov_nonzero = false;
  TorsionCertificate certificate;
  bool in_s_ell = false;
  EllPrimaryCuspidal ell_primary;
  std::optional<GroupStructure> new_quotient_image;
};

struct AnalysisReport {
  PrimePair pair;
  GenusReport genus;
  CuspidalOrders cuspidal;
  std::vector<EllAnalysis> per_ell;
  std::vector<std::uint64_t> exceptional_primes;
  GroupStructure kernel;
};

/// Covers odd ell <= ell_bound, every exceptional prime and every odd prime
/// dividing (p+1)(q+1). Throws PreconditionError if ell_bound < 3.
[[nodiscard]] AnalysisReport analyze(const PrimePair& pair, std::uint64_t ell_bound);

[[nodiscard]] std::string render_text(const AnalysisReport& report);
[[nodiscard]] std::string render_json(const AnalysisReport& report);

}  // namespace pqtorsion
