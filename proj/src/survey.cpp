#include "pqtorsion/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace pqtorsion {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void compare_cell(std::vector<std::string>& out, const PrimePair& pair, const char* column,
                  const std::string& computed, const std::string& published) {
  if (computed == published) return;
  out.push_back(pair.to_string() + " " + column + ": computed " + computed + ", published " + published);
}

std::vector<PrimePair> pairs_in_range(std::uint64_t p_max, std::uint64_t q_max) {
  std::vector<PrimePair> out;
  const auto ps = odd_primes_up_to(p_max);
  const auto qs = odd_primes_up_to(q_max);
  std::vector<std::uint64_t> p_list;
  std::vector<std::uint64_t> q_list;
  if (p_max >= 2) p_list.push_back(2);
  if (q_max >= 2) q_list.push_back(2);
  p_list.insert(p_list.end(), ps.begin(), ps.end());
  q_list.insert(q_list.end(), qs.begin(), qs.end());
  for (std::uint64_t p : p_list) {
    for (std::uint64_t q : q_list) {
      if (p < q) out.emplace_back(p, q);
    }
  }
  return out;
}

nlohmann::json trace_json(const std::vector<TraceEntry>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : trace) out.push_back({{"condition", e.condition}, {"holds", e.holds}});
  return out;
}

nlohmann::json group_json(const GroupStructure& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const Natural& f : g.factors()) out.push_back(f.to_u64());
  return out;
}

}  // namespace

TableRow compute_row(const PrimePair& pair) {
  GroupStructure d = kernel_subgroup(pair);
  Natural order = d.order();
  return TableRow{
      .pair = pair,
      .genus = genus(pair).genus,
      .in_s3 = s_ell_member(pair, OddPrime{3}),
      .in_s5 = s_ell_member(pair, OddPrime{5}),
      .in_s7 = s_ell_member(pair, OddPrime{7}),
      .d_order = order,
      .d_structure = std::move(d),
      .k_order_fixture = std::nullopt,
  };
}

Table1Result table1() {
  Table1Result result;
  ScanOptions options{.p_max = kLowGenusPrimeBound, .q_max = kLowGenusPrimeBound, .genus_max = 3, .threads = 1};
  result.rows = scan(options);

  const auto fixture = table1_fixture();
  std::set<std::pair<std::uint64_t, std::uint64_t>> swept;
  for (TableRow& row : result.rows) {
    swept.emplace(row.pair.p(), row.pair.q());
    const auto it = std::find_if(fixture.begin(), fixture.end(), [&](const FixtureRow& f) {
      return f.p == row.pair.p() && f.q == row.pair.q();
    });
    if (it == fixture.end()) {
      result.mismatches.push_back(row.pair.to_string() + ": swept with genus " + std::to_string(row.genus) +
                                  " but absent from the published table");
      continue;
    }
    row.k_order_fixture = Natural{it->k_order};
    auto& mm = result.mismatches;
    compare_cell(mm, row.pair, "genus", std::to_string(row.genus), std::to_string(it->genus));
    compare_cell(mm, row.pair, "in_S3", yes_no(row.in_s3), yes_no(it->in_s3));
    compare_cell(mm, row.pair, "in_S5", yes_no(row.in_s5), yes_no(it->in_s5));
    compare_cell(mm, row.pair, "in_S7", yes_no(row.in_s7), yes_no(it->in_s7));
    compare_cell(mm, row.pair, "d_order", row.d_order.to_string(), std::to_string(it->d_order));
  }
  for (const FixtureRow& f : fixture) {
    if (!swept.contains({f.p, f.q})) {
      result.mismatches.push_back("(" + std::to_string(f.p) + ", " + std::to_string(f.q) +
                                  "): published but not produced by the genus sweep");
    }
  }
  return result;
}

std::vector<TableRow> scan(const ScanOptions& options) {
  const std::vector<PrimePair> pairs = pairs_in_range(options.p_max, options.q_max);
  std::vector<std::optional<TableRow>> slots(pairs.size());

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, pairs.size())));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < pairs.size(); i = next++) {
        if (options.genus_max) {
          const auto g = genus(pairs[i]).genus;
          if (g == 0 || g > *options.genus_max) continue;
        }
        slots[i] = compute_row(pairs[i]);
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<TableRow> rows;
  for (auto& slot : slots) {
    if (slot) rows.push_back(std::move(*slot));
  }
  return rows;
}

AnalysisReport analyze(const PrimePair& pair, std::uint64_t ell_bound) {
  if (ell_bound < 3) throw PreconditionError("ell bound must be at least 3");
  AnalysisReport report{
      .pair = pair,
      .genus = genus(pair),
      .cuspidal = cuspidal_orders(pair),
      .per_ell = {},
      .exceptional_primes = exceptional_primes(pair),
      .kernel = kernel_subgroup(pair),
  };

  std::set<std::uint64_t> ells;
  for (auto l : odd_primes_up_to(ell_bound)) ells.insert(l);
  ells.insert(report.exceptional_primes.begin(), report.exceptional_primes.end());
  for (auto l : odd_prime_divisors((Natural{pair.p()} + 1) * (Natural{pair.q()} + 1))) ells.insert(l);

  for (std::uint64_t l : ells) {
    const OddPrime ell{l};
    report.per_ell.push_back({
        .ell = l,
        .verdicts = classify(pair, ell),
        .skorobogatov_nonzero = skorobogatov_nonzero(pair, ell),
        .certificate = certify(pair, ell),
        .in_s_ell = s_ell_member(pair, ell),
        .ell_primary = ell_primary_cuspidal(pair, ell),
        .new_quotient_image = new_quotient_image(pair, ell),
    });
  }
  return report;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "pair " << r.pair.to_string() << "  discriminant " << (Natural{r.pair.p()} * r.pair.q()).to_string() << "\n";
  out << "genus " << r.genus.genus << "  (e2 = " << r.genus.e2 << ", e3 = " << r.genus.e3 << ")\n";
  if (r.genus.genus_zero()) {
    out << "warning: genus 0, the torsion and kernel criteria assume genus != 0\n";
  }
  out << "odd part of #C_p = " << r.cuspidal.order_cp_odd.to_string()
      << ", odd part of #C_q = " << r.cuspidal.order_cq_odd.to_string() << "\n";
  out << "exceptional primes (no torsion certificate):";
  if (r.exceptional_primes.empty()) out << " none";
  for (auto l : r.exceptional_primes) out << " " << l;
  out << "\n";
  out << "D(pq) = " << r.kernel.to_string() << "  order " << r.kernel.order().to_string() << "\n\n";

  for (const EllAnalysis& e : r.per_ell) {
    out << "ell = " << e.ell << "\n";
    for (const IdealVerdict& v : e.verdicts) {
      out << "  " << ideal_name(v.ideal) << " " << ideal_generators(v.ideal) << ": "
          << (v.maximal ? "maximal" : "not maximal");
      std::string fired;
      for (const auto& t : v.trace) {
        if (t.holds) fired += (fired.empty() ? "" : ", ") + t.condition;
      }
      if (!fired.empty()) out << " [" << fired << "]";
      out << "\n";
    }
    out << "  S_q[ell] " << (e.skorobogatov_nonzero ? "nonzero" : "zero") << "\n";
    out << "  torsion: " << status_name(e.certificate.status);
    for (const auto& c : e.certificate.conditions) {
      if (c.holds) out << " [" << c.condition << "]";
    }
    out << "\n";
    out << "  in S_ell: " << yes_no(e.in_s_ell) << "\n";
    if (e.ell_primary.known) {
      out << "  C_ell(pq) = Z/" << e.ell << "^" << e.ell_primary.a << " + Z/" << e.ell << "^" << e.ell_primary.b
          << "\n";
    } else {
      out << "  C_ell(pq): unknown\n";
    }
    out << "  pi(C_ell(pq)) = " << (e.new_quotient_image ? e.new_quotient_image->to_string() : "unknown") << "\n";
  }
  return out.str();
}

std::string render_json(const AnalysisReport& r) {
  nlohmann::json doc;
  doc["pair"] = {r.pair.p(), r.pair.q()};
  doc["genus"] = {{"genus", r.genus.genus}, {"e2", r.genus.e2}, {"e3", r.genus.e3}, {"genus_zero", r.genus.genus_zero()}};
  doc["cuspidal_orders"] = {{"order_Cp_odd", r.cuspidal.order_cp_odd.to_u64()},
                            {"order_Cq_odd", r.cuspidal.order_cq_odd.to_u64()}};
  doc["exceptional_primes"] = r.exceptional_primes;
  doc["kernel"] = group_json(r.kernel);
  doc["kernel_order"] = r.kernel.order().to_u64();
  nlohmann::json per = nlohmann::json::array();
  for (const EllAnalysis& e : r.per_ell) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const IdealVerdict& v : e.verdicts) {
      verdicts.push_back({{"ideal", ideal_name(v.ideal)},
                          {"generators", ideal_generators(v.ideal)},
                          {"maximal", v.maximal},
                          {"trace", trace_json(v.trace)}});
    }
    nlohmann::json item = {
        {"ell", e.ell},
        {"ideals", verdicts},
        {"skorobogatov_nonzero", e.skorobogatov_nonzero},
        {"certificate",
         {{"status", status_name(e.certificate.status)}, {"conditions", trace_json(e.certificate.conditions)}}},
        {"in_S_ell", e.in_s_ell},
    };
    item["ell_primary_cuspidal"] = e.ell_primary.known
                                       ? nlohmann::json{{"a", e.ell_primary.a}, {"b", e.ell_primary.b}}
                                       : nlohmann::json(nullptr);
    item["new_quotient_image"] = e.new_quotient_image ? group_json(*e.new_quotient_image) : nlohmann::json(nullptr);
    per.push_back(std::move(item));
  }
  doc["per_ell"] = std::move(per);
  return doc.dump(2) + "\n";
}

}  // namespace pqtorsion
