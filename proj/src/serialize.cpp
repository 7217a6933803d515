#include "pqtorsion/serialize.hpp"

#include <json.hpp>

namespace pqtorsion {

namespace {

constexpr const char* kColumns[] = {"p", "q", "genus", "in_S3", "in_S5", "in_S7", "d_order", "d_structure", "k_order"};
constexpr std::size_t kColumnCount = std::size(kColumns);

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool parse_yes_no(std::string_view s, std::size_t line) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw ParseError("line " + std::to_string(line) + ": expected yes/no, got '" + std::string(s) + "'");
}

// Plain fields only; the format never needs quoting since no value contains a separator.
std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string structure_field(const GroupStructure& g) {
  std::string out;
  for (const Natural& f : g.factors()) {
    if (!out.empty()) out += ';';
    out += f.to_string();
  }
  return out;
}

GroupStructure parse_structure(std::string_view s) {
  std::vector<Natural> factors;
  if (!s.empty()) {
    for (auto part : split(s, ';')) factors.push_back(Natural::parse(part));
  }
  return GroupStructure(std::move(factors));
}

// Builds a row from parsed cells, rejecting rows whose d_order disagrees with d_structure.
TableRow assemble(std::uint64_t p, std::uint64_t q, std::uint64_t genus, bool s3, bool s5, bool s7, Natural d_order,
                  GroupStructure structure, std::optional<Natural> k_order) {
  if (structure.order() != d_order) {
    throw ParseError("row (" + std::to_string(p) + ", " + std::to_string(q) + "): d_order " + d_order.to_string() +
                     " disagrees with d_structure order " + structure.order().to_string());
  }
  return TableRow{.pair = PrimePair(p, q),
                  .genus = genus,
                  .in_s3 = s3,
                  .in_s5 = s5,
                  .in_s7 = s7,
                  .d_order = d_order,
                  .d_structure = std::move(structure),
                  .k_order_fixture = k_order};
}

nlohmann::json natural_json(Natural n) {
  return n.fits_u64() ? nlohmann::json(n.to_u64()) : nlohmann::json(n.to_string());
}

Natural json_natural(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Natural{j.get<std::uint64_t>()};
  if (j.is_string()) return Natural::parse(j.get<std::string>());
  throw ParseError("expected a nonnegative integer, got " + j.dump());
}

}  // namespace

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kColumnCount; ++i) {
    if (i != 0) out += ',';
    out += kColumns[i];
  }
  return out + "\r\n";
}

std::string csv_record(const TableRow& row) {
  std::string out;
  out += std::to_string(row.pair.p()) + ',';
  out += std::to_string(row.pair.q()) + ',';
  out += std::to_string(row.genus) + ',';
  out += yes_no(row.in_s3) + ',' + yes_no(row.in_s5) + ',' + yes_no(row.in_s7) + ',';
  out += row.d_order.to_string() + ',';
  out += structure_field(row.d_structure) + ',';
  if (row.k_order_fixture) out += row.k_order_fixture->to_string();
  return out + "\r\n";
}

std::string to_csv(std::span<const TableRow> rows) {
  std::string out = csv_header();
  for (const TableRow& row : rows) out += csv_record(row);
  return out;
}

std::vector<TableRow> parse_csv(std::string_view text) {
  std::vector<TableRow> rows;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto cells = split(line, ',');
    if (cells.size() != kColumnCount) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(kColumnCount) +
                       " fields, got " + std::to_string(cells.size()));
    }
    if (!header_seen) {
      for (std::size_t i = 0; i < kColumnCount; ++i) {
        if (cells[i] != kColumns[i]) throw ParseError("CSV header mismatch at column " + std::to_string(i + 1));
      }
      header_seen = true;
      continue;
    }
    std::optional<Natural> k;
    if (!cells[8].empty()) k = Natural::parse(cells[8]);
    rows.push_back(assemble(Natural::parse(cells[0]).to_u64(), Natural::parse(cells[1]).to_u64(),
                            Natural::parse(cells[2]).to_u64(), parse_yes_no(cells[3], line_no),
                            parse_yes_no(cells[4], line_no), parse_yes_no(cells[5], line_no),
                            Natural::parse(cells[6]), parse_structure(cells[7]), k));
  }
  if (!header_seen) throw ParseError("CSV input has no header row");
  return rows;
}

std::string to_json(std::span<const TableRow> rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const TableRow& row : rows) {
    nlohmann::json structure = nlohmann::json::array();
    for (const Natural& f : row.d_structure.factors()) structure.push_back(natural_json(f));
    doc.push_back({
        {"pair", {row.pair.p(), row.pair.q()}},
        {"genus", row.genus},
        {"in_S3", row.in_s3},
        {"in_S5", row.in_s5},
        {"in_S7", row.in_s7},
        {"d_order", natural_json(row.d_order)},
        {"d_structure", structure},
        {"k_order_fixture", row.k_order_fixture ? natural_json(*row.k_order_fixture) : nlohmann::json(nullptr)},
    });
  }
  return doc.dump(2) + "\n";
}

std::vector<TableRow> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("JSON input must be a top-level array");
  std::vector<TableRow> rows;
  try {
    for (const auto& item : doc) {
      const auto& pair = item.at("pair");
      if (!pair.is_array() || pair.size() != 2) throw ParseError("pair must be a two-element array");
      std::vector<Natural> factors;
      for (const auto& f : item.at("d_structure")) factors.push_back(json_natural(f));
      std::optional<Natural> k;
      if (const auto& kj = item.at("k_order_fixture"); !kj.is_null()) k = json_natural(kj);
      rows.push_back(assemble(pair[0].get<std::uint64_t>(), pair[1].get<std::uint64_t>(),
                              item.at("genus").get<std::uint64_t>(), item.at("in_S3").get<bool>(),
                              item.at("in_S5").get<bool>(), item.at("in_S7").get<bool>(),
                              json_natural(item.at("d_order")), GroupStructure(std::move(factors)), k));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("unexpected JSON row layout: ") + e.what());
  }
  return rows;
}

std::string serialize(std::span<const TableRow> rows, Format format) {
  return format == Format::Csv ? to_csv(rows) : to_json(rows);
}

std::vector<TableRow> parse(std::string_view text, Format format) {
  return format == Format::Csv ? parse_csv(text) : parse_json(text);
}

}  // namespace pqtorsion
