#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quandle_lab/io.hpp"

namespace quandle_lab {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name);

struct TextTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

/// Display columns of UTF-8 text; combining marks take no column.
std::size_t display_width(std::string_view s);
/// Left-aligned columns separated by two spaces.
std::string render_text(const TextTable& t);
/// RFC 4180 quoting.
std::string render_csv(const TextTable& t);

/// Rows are sorted by (dimension, label) unless `table_order`, which keeps the decomposition's own order.
std::string export_report(const Decomposition& d, Format format, bool table_order = false);
std::string export_report(const Classification& c, Format format);
std::string export_report(const std::vector<AppendixRow>& rows, Format format);
std::string export_report(const InfoSummary& s, Format format);
std::string export_report(const S3HomReport& r, Format format);
std::string export_report(const MaschkeReport& r, Format format);
std::string export_report(const NormalizeResult& r, Format format);
std::string export_report(const IsoResult& r, Format format);

/// Parts in report order.
std::vector<const Part*> report_order(const Decomposition& d, bool table_order);

}  // namespace quandle_lab
