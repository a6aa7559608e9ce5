#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quandle_lab/finite_field.hpp"
#include "quandle_lab/maschke.hpp"
#include "quandle_lab/polysys.hpp"
#include "quandle_lab/presentation.hpp"
#include "quandle_lab/quandle.hpp"
#include "quandle_lab/representation.hpp"

namespace quandle_lab {

using Json = nlohmann::json;

/// Raw table as stored on disk, before any axiom check.
struct TableData {
  int order = 0;
  std::vector<int> table;  // row-major, table[x*order+y] = x▷y
  std::string label;
  friend bool operator==(const TableData&, const TableData&) = default;
};

/// {"order": n, "table": [[int]], "label": str}
Json to_json(const Quandle& q);
/// ParseError on a missing or mistyped field, MalformedTable on a non-square table.
TableData table_from_json(const Json& j);
/// table_from_json followed by the axiom check.
Quandle quandle_from_json(const Json& j);

/// {"p", "n", "modulus": [c0, ..., cn]}
Json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);

/// Rows of [re, im] pairs.
Json to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

/// {"quandle": ..., "dim": d, "matrices": [...]}
Json to_json(const QuandleRep& rep);
/// Validated through check_rep.
QuandleRep rep_from_json(const Json& j);

Json to_json(const IrrepLabel& label);
IrrepLabel label_from_json(const Json& j);

/// {"ambient", "parts": [{"dim", "label", "label_text", "name", "generator", "basis"}]}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {"q", "p", "n", "classes": [{"rep_log", "member_logs"}], "count"}
Json to_json(const Classification& c);
/// Elements are rebuilt from their logs in the default field of order q.
Classification classification_from_json(const Json& j);

Json to_json(const AppendixRow& row);
AppendixRow appendix_row_from_json(const Json& j);

Json to_json(const S3HomReport& r);
S3HomReport s3_report_from_json(const Json& j);

Json to_json(const MaschkeReport& r);
MaschkeReport maschke_report_from_json(const Json& j);

/// Summary printed by `quandle info`.
struct InfoSummary {
  std::string label;
  int order = 0;
  std::vector<std::vector<int>> orbits;
  bool connected = false;
  long long inn_order = -1;          // -1 when the closure cap was hit
  std::optional<int> inn_dihedral;   // m when Inn ≅ D_m was recognised
  std::optional<bool> cyclic_type;   // unset for order <= 2
  std::optional<int> dihedral_n;
  friend bool operator==(const InfoSummary&, const InfoSummary&) = default;
};
InfoSummary summarize(const Quandle& q, std::size_t inn_cap = 1'000'000);
Json to_json(const InfoSummary& s);
InfoSummary info_from_json(const Json& j);

/// Result of `present normalize`.
struct NormalizeResult {
  int q = 0;
  int alpha_log = 0;
  std::string word;
  std::string normal_form;
  std::string field_value;
  friend bool operator==(const NormalizeResult&, const NormalizeResult&) = default;
};
Json to_json(const NormalizeResult& r);
NormalizeResult normalize_result_from_json(const Json& j);

/// Result of `iso A B`.
struct IsoResult {
  std::string a;
  std::string b;
  std::optional<std::vector<int>> map;
  friend bool operator==(const IsoResult&, const IsoResult&) = default;
};
Json to_json(const IsoResult& r);
IsoResult iso_result_from_json(const Json& j);

/// ParseError when the file is unreadable or not JSON.
Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline. ParseError when the file cannot be written.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace quandle_lab
