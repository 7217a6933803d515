// Command-line front end over the C API in pqtorsion.h.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pqtorsion/pqtorsion.h"

namespace {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3, kFailure = 4 };

struct RowsDeleter {
  void operator()(pqt_rows* r) const { pqt_rows_destroy(r); }
};
struct ReportDeleter {
  void operator()(pqt_report* r) const { pqt_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { pqt_free_string(s); }
};
using RowsPtr = std::unique_ptr<pqt_rows, RowsDeleter>;
using ReportPtr = std::unique_ptr<pqt_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_error(pqt_status status) {
  std::cerr << "error: " << pqt_status_string(status);
  if (const char* msg = pqt_last_error(); msg != nullptr && *msg != '\0') std::cerr << ": " << msg;
  std::cerr << "\n";
  switch (status) {
    case PQT_ERR_INVALID_ARGUMENT:
    case PQT_ERR_INVALID_PAIR:
    case PQT_ERR_DOMAIN: return kUsage;
    case PQT_ERR_IO: return kIo;
    default: return kFailure;
  }
}

int emit(const pqt_rows* rows, pqt_format format, const std::string& out_path) {
  if (!out_path.empty()) {
    const pqt_status st = pqt_rows_write(rows, format, out_path.c_str());
    return st == PQT_OK ? kOk : report_error(st);
  }
  char* raw = nullptr;
  const pqt_status st = pqt_rows_serialize(rows, format, &raw);
  if (st != PQT_OK) return report_error(st);
  StringPtr text(raw);
  std::fwrite(text.get(), 1, std::char_traits<char>::length(text.get()), stdout);
  if (std::fflush(stdout) != 0) {
    std::cerr << "error: failed writing to standard output\n";
    return kIo;
  }
  return kOk;
}

int run_analyze(std::uint64_t p, std::uint64_t q, std::uint64_t ell_bound, bool json) {
  pqt_report* raw = nullptr;
  if (const pqt_status st = pqt_analyze(p, q, ell_bound, &raw); st != PQT_OK) return report_error(st);
  ReportPtr report(raw);
  char* text = nullptr;
  if (const pqt_status st = pqt_report_render(report.get(), json ? PQT_REPORT_JSON : PQT_REPORT_TEXT, &text);
      st != PQT_OK) {
    return report_error(st);
  }
  StringPtr owned(text);
  std::cout << owned.get();
  return kOk;
}

int run_table1(pqt_format format, const std::string& out_path) {
  pqt_rows* raw = nullptr;
  if (const pqt_status st = pqt_table1(&raw); st != PQT_OK) return report_error(st);
  RowsPtr rows(raw);
  if (const int rc = emit(rows.get(), format, out_path); rc != kOk) return rc;
  const std::size_t mismatches = pqt_rows_mismatch_count(rows.get());
  if (mismatches == 0) return kOk;
  std::cerr << "table1: " << mismatches << " difference(s) against the published table\n";
  for (std::size_t i = 0; i < mismatches; ++i) std::cerr << "  " << pqt_rows_mismatch(rows.get(), i) << "\n";
  return kMismatch;
}

int run_scan(const pqt_scan_options& options, pqt_format format, const std::string& out_path) {
  pqt_rows* raw = nullptr;
  if (const pqt_status st = pqt_scan(&options, &raw); st != PQT_OK) return report_error(st);
  RowsPtr rows(raw);
  return emit(rows.get(), format, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational torsion criteria for Jacobians of discriminant-pq Shimura curves"};
  app.require_subcommand(1);

  const std::map<std::string, pqt_format> formats{{"csv", PQT_FORMAT_CSV}, {"json", PQT_FORMAT_JSON}};

  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t ell_bound = 7;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Eisenstein ideals, torsion certificates and D(pq) for one pair");
  analyze->add_option("p", p, "first prime")->required();
  analyze->add_option("q", q, "second prime")->required();
  analyze->add_option("--ell-bound", ell_bound, "report every odd prime ell up to this bound")
      ->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 32));
  analyze->add_flag("--json", analyze_json, "emit the report as JSON");

  pqt_format table_format = PQT_FORMAT_CSV;
  std::string table_out;
  auto* table = app.add_subcommand("table1", "reproduce the low-genus table and compare with the published values");
  table->add_option("--format", table_format, "csv or json")->transform(CLI::CheckedTransformer(formats));
  table->add_option("--out", table_out, "write to this file instead of standard output");

  pqt_scan_options scan_options{.p_max = 0, .q_max = 0, .has_genus_max = 0, .genus_max = 0, .threads = 0};
  std::optional<std::uint64_t> genus_max;
  pqt_format scan_format = PQT_FORMAT_CSV;
  std::string scan_out;
  auto* scan = app.add_subcommand("scan", "table rows for every prime pair p < q within the bounds");
  scan->add_option("--p-max", scan_options.p_max, "largest p")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  scan->add_option("--q-max", scan_options.q_max, "largest q")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  scan->add_option("--genus-max", genus_max, "keep only pairs with 1 <= genus <= G");
  scan->add_option("--format", scan_format, "csv or json")->transform(CLI::CheckedTransformer(formats));
  scan->add_option("--out", scan_out, "write to this file instead of standard output");
  scan->add_option("--threads", scan_options.threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*analyze) return run_analyze(p, q, ell_bound, analyze_json);
  if (*table) return run_table1(table_format, table_out);
  if (genus_max) {
    scan_options.has_genus_max = 1;
    scan_options.genus_max = *genus_max;
  }
  return run_scan(scan_options, scan_format, scan_out);
}
