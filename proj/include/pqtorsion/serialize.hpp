#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqtorsion/survey.hpp"

namespace pqtorsion {

enum class Format { Csv, Json };

/// Header plus one CRLF-terminated record per row. Columns:
/// p,q,genus,in_S3,in_S5,in_S7,d_order,d_structure,k_order
/// Booleans are yes/no, d_structure is ';'-joined factors (empty if trivial),
/// k_order is empty when there is no fixture.
[[nodiscard]] std::string to_csv(std::span<const TableRow> rows);
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_record(const TableRow& row);

/// One top-level array of row objects.
[[nodiscard]] std::string to_json(std::span<const TableRow> rows);

[[nodiscard]] std::vector<TableRow> parse_csv(std::string_view text);
[[nodiscard]] std::vector<TableRow> parse_json(std::string_view text);

[[nodiscard]] std::string serialize(std::span<const TableRow> rows, Format format);
[[nodiscard]] std::vector<TableRow> parse(std::string_view text, Format format);

}  // namespace pqtorsion
