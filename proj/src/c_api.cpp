#include "pqtorsion/pqtorsion.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "pqtorsion/serialize.hpp"
#include "pqtorsion/survey.hpp"

struct pqt_rows {
  std::vector<pqtorsion::TableRow> rows;
  std::vector<std::string> mismatches;
};

struct pqt_report {
  pqtorsion::AnalysisReport report;
};

namespace {

thread_local std::string g_last_error;

pqt_status fail(pqt_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body and maps library exceptions onto status codes. Subclasses are
// caught before their bases.
template <typename Body>
pqt_status guarded(Body&& body) noexcept {
  g_last_error.clear();
  try {
    return body();
  } catch (const pqtorsion::InvalidPairError& e) {
    return fail(PQT_ERR_INVALID_PAIR, e.what());
  } catch (const pqtorsion::PreconditionError& e) {
    return fail(PQT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const pqtorsion::DomainError& e) {
    return fail(PQT_ERR_DOMAIN, e.what());
  } catch (const pqtorsion::OverflowError& e) {
    return fail(PQT_ERR_OVERFLOW, e.what());
  } catch (const pqtorsion::ParseError& e) {
    return fail(PQT_ERR_PARSE, e.what());
  } catch (const pqtorsion::IoError& e) {
    return fail(PQT_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(PQT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PQT_ERR_INTERNAL, "unknown exception");
  }
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t saturate(pqtorsion::Natural n) { return n.fits_u64() ? n.to_u64() : UINT64_MAX; }

pqt_status null_argument(const char* name) {
  return fail(PQT_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

bool valid_format(pqt_format f) { return f == PQT_FORMAT_CSV || f == PQT_FORMAT_JSON; }

pqtorsion::Format to_format(pqt_format f) {
  return f == PQT_FORMAT_CSV ? pqtorsion::Format::Csv : pqtorsion::Format::Json;
}

}  // namespace

extern "C" {

uint32_t pqt_abi_version(void) { return PQT_ABI_VERSION; }

const char* pqt_status_string(pqt_status status) {
  switch (status) {
    case PQT_OK: return "ok";
    case PQT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PQT_ERR_INVALID_PAIR: return "invalid prime pair";
    case PQT_ERR_DOMAIN: return "domain error";
    case PQT_ERR_OVERFLOW: return "overflow";
    case PQT_ERR_PARSE: return "parse error";
    case PQT_ERR_IO: return "I/O error";
    case PQT_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case PQT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pqt_last_error(void) { return g_last_error.c_str(); }

void pqt_free_string(char* s) { std::free(s); }

pqt_status pqt_is_prime(uint64_t n, int* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = pqtorsion::is_prime(n) ? 1 : 0;
    return PQT_OK;
  });
}

pqt_status pqt_genus(uint64_t p, uint64_t q, pqt_genus_info* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const auto g = pqtorsion::genus(pqtorsion::PrimePair(p, q));
    *out = {g.e2, g.e3, g.genus};
    return PQT_OK;
  });
}

pqt_status pqt_ideal_maximal(uint64_t p, uint64_t q, uint64_t ell, pqt_ideal ideal, int* out) {
  if (out == nullptr) return null_argument("out");
  if (ideal < PQT_IDEAL_M1 || ideal > PQT_IDEAL_M4) return fail(PQT_ERR_INVALID_ARGUMENT, "unknown ideal");
  return guarded([&] {
    const auto verdicts = pqtorsion::classify(pqtorsion::PrimePair(p, q), pqtorsion::OddPrime(ell));
    *out = verdicts[static_cast<std::size_t>(ideal)].maximal ? 1 : 0;
    return PQT_OK;
  });
}

pqt_status pqt_skorobogatov_nonzero(uint64_t p, uint64_t q, uint64_t ell, int* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = pqtorsion::skorobogatov_nonzero(pqtorsion::PrimePair(p, q), pqtorsion::OddPrime(ell)) ? 1 : 0;
    return PQT_OK;
  });
}

pqt_status pqt_certify(uint64_t p, uint64_t q, uint64_t ell, pqt_certificate* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const auto cert = pqtorsion::certify(pqtorsion::PrimePair(p, q), pqtorsion::OddPrime(ell));
    *out = cert.status == pqtorsion::CertificateStatus::Certified ? PQT_CERTIFIED : PQT_NOT_CERTIFIED;
    return PQT_OK;
  });
}

pqt_status pqt_s_ell_member(uint64_t p, uint64_t q, uint64_t ell, int* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = pqtorsion::s_ell_member(pqtorsion::PrimePair(p, q), pqtorsion::OddPrime(ell)) ? 1 : 0;
    return PQT_OK;
  });
}

pqt_status pqt_exceptional_primes(uint64_t p, uint64_t q, uint64_t* primes, size_t capacity, size_t* count) {
  if (count == nullptr) return null_argument("count");
  if (primes == nullptr && capacity != 0) return null_argument("primes");
  return guarded([&] {
    const auto ells = pqtorsion::exceptional_primes(pqtorsion::PrimePair(p, q));
    *count = ells.size();
    if (ells.size() > capacity) return fail(PQT_ERR_BUFFER_TOO_SMALL, "exceptional prime buffer too small");
    std::copy(ells.begin(), ells.end(), primes);
    return PQT_OK;
  });
}

pqt_status pqt_kernel_subgroup(uint64_t p, uint64_t q, uint64_t* factors, size_t capacity, size_t* count,
                               uint64_t* order) {
  if (count == nullptr) return null_argument("count");
  if (factors == nullptr && capacity != 0) return null_argument("factors");
  return guarded([&] {
    const auto d = pqtorsion::kernel_subgroup(pqtorsion::PrimePair(p, q));
    const auto fs = d.factors();
    *count = fs.size();
    if (order != nullptr) *order = saturate(d.order());
    if (fs.size() > capacity) return fail(PQT_ERR_BUFFER_TOO_SMALL, "factor buffer too small");
    for (std::size_t i = 0; i < fs.size(); ++i) factors[i] = saturate(fs[i]);
    return PQT_OK;
  });
}

pqt_status pqt_table1(pqt_rows** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto result = pqtorsion::table1();
    *out = new pqt_rows{std::move(result.rows), std::move(result.mismatches)};
    return PQT_OK;
  });
}

pqt_status pqt_scan(const pqt_scan_options* options, pqt_rows** out) {
  if (options == nullptr) return null_argument("options");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (options->p_max < 2 || options->q_max < 2) {
    return fail(PQT_ERR_INVALID_ARGUMENT, "scan bounds must be at least 2");
  }
  return guarded([&] {
    pqtorsion::ScanOptions opts{.p_max = options->p_max, .q_max = options->q_max, .genus_max = std::nullopt,
                                .threads = options->threads};
    if (options->has_genus_max != 0) opts.genus_max = options->genus_max;
    *out = new pqt_rows{pqtorsion::scan(opts), {}};
    return PQT_OK;
  });
}

pqt_status pqt_rows_parse(const char* text, size_t length, pqt_format format, pqt_rows** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (text == nullptr && length != 0) return null_argument("text");
  if (!valid_format(format)) return fail(PQT_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    auto rows = pqtorsion::parse(std::string_view(text == nullptr ? "" : text, length), to_format(format));
    *out = new pqt_rows{std::move(rows), {}};
    return PQT_OK;
  });
}

size_t pqt_rows_count(const pqt_rows* rows) { return rows == nullptr ? 0 : rows->rows.size(); }

pqt_status pqt_rows_get(const pqt_rows* rows, size_t index, pqt_row_info* out) {
  if (rows == nullptr) return null_argument("rows");
  if (out == nullptr) return null_argument("out");
  if (index >= rows->rows.size()) return fail(PQT_ERR_INVALID_ARGUMENT, "row index out of range");
  const auto& r = rows->rows[index];
  *out = pqt_row_info{
      .p = r.pair.p(),
      .q = r.pair.q(),
      .genus = r.genus,
      .in_s3 = r.in_s3 ? 1 : 0,
      .in_s5 = r.in_s5 ? 1 : 0,
      .in_s7 = r.in_s7 ? 1 : 0,
      .d_order = saturate(r.d_order),
      .has_k_order = r.k_order_fixture ? 1 : 0,
      .k_order = r.k_order_fixture ? saturate(*r.k_order_fixture) : 0,
  };
  g_last_error.clear();
  return PQT_OK;
}

size_t pqt_rows_mismatch_count(const pqt_rows* rows) { return rows == nullptr ? 0 : rows->mismatches.size(); }

const char* pqt_rows_mismatch(const pqt_rows* rows, size_t index) {
  if (rows == nullptr || index >= rows->mismatches.size()) return nullptr;
  return rows->mismatches[index].c_str();
}

pqt_status pqt_rows_serialize(const pqt_rows* rows, pqt_format format, char** out) {
  if (rows == nullptr) return null_argument("rows");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (!valid_format(format)) return fail(PQT_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    *out = duplicate(pqtorsion::serialize(rows->rows, to_format(format)));
    return PQT_OK;
  });
}

pqt_status pqt_rows_write(const pqt_rows* rows, pqt_format format, const char* path) {
  if (rows == nullptr) return null_argument("rows");
  if (path == nullptr) return null_argument("path");
  if (!valid_format(format)) return fail(PQT_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    const std::string text = pqtorsion::serialize(rows->rows, to_format(format));
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw pqtorsion::IoError(std::string("cannot open ") + path + " for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.close();
    if (!file) throw pqtorsion::IoError(std::string("failed writing ") + path);
    return PQT_OK;
  });
}

void pqt_rows_destroy(pqt_rows* rows) { delete rows; }

pqt_status pqt_analyze(uint64_t p, uint64_t q, uint64_t ell_bound, pqt_report** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new pqt_report{pqtorsion::analyze(pqtorsion::PrimePair(p, q), ell_bound)};
    return PQT_OK;
  });
}

int pqt_report_genus_zero(const pqt_report* report) {
  return report != nullptr && report->report.genus.genus_zero() ? 1 : 0;
}

pqt_status pqt_report_render(const pqt_report* report, pqt_report_style style, char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (style != PQT_REPORT_TEXT && style != PQT_REPORT_JSON) return fail(PQT_ERR_INVALID_ARGUMENT, "unknown style");
  return guarded([&] {
    *out = duplicate(style == PQT_REPORT_TEXT ? pqtorsion::render_text(report->report)
                                              : pqtorsion::render_json(report->report));
    return PQT_OK;
  });
}

void pqt_report_destroy(pqt_report* report) { delete report; }

}  // extern "C"
