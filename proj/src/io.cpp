#include "quandle_lab/io.hpp"

#include <fstream>
#include <sstream>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\": " + e.what());
  }
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_get(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return get<T>(j, key);
}

Json complex_json(cd c) { return Json::array({c.real(), c.imag()}); }

cd complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, "complex entries are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string_view kind_name(IrrepLabel::Kind k) {
  switch (k) {
    case IrrepLabel::Kind::C:
      return "C";
    case IrrepLabel::Kind::W:
      return "W";
    case IrrepLabel::Kind::Opaque:
      return "opaque";
  }
  return "?";
}

}  // namespace

Json to_json(const Quandle& q) {
  Json rows = Json::array();
  for (int x = 0; x < q.order(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < q.order(); ++y) row.push_back(q(x, y));
    rows.push_back(std::move(row));
  }
  return {{"order", q.order()}, {"table", std::move(rows)}, {"label", q.label()}};
}

TableData table_from_json(const Json& j) {
  TableData data;
  data.order = get<int>(j, "order");
  data.label = j.contains("label") ? get<std::string>(j, "label") : std::string{};
  const auto rows = get<std::vector<std::vector<int>>>(j, "table");
  if (data.order < 1 || rows.size() != static_cast<std::size_t>(data.order)) {
    throw Error(ErrorCode::MalformedTable, "table must have \"order\" rows");
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorCode::MalformedTable, "table must be square");
    data.table.insert(data.table.end(), row.begin(), row.end());
  }
  return data;
}

Quandle quandle_from_json(const Json& j) {
  TableData data = table_from_json(j);
  return Quandle::from_table(data.order, std::move(data.table), std::move(data.label));
}

Json to_json(const FieldSpec& spec) { return {{"p", spec.p}, {"n", spec.n}, {"modulus", spec.modulus}}; }

FieldSpec field_spec_from_json(const Json& j) {
  FieldSpec spec;
  spec.p = get<int>(j, "p");
  spec.n = get<int>(j, "n");
  spec.modulus = get<PolyZp>(j, "modulus");
  return spec;
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw Error(ErrorCode::ParseError, "matrix rows must have equal length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const QuandleRep& rep) {
  Json mats = Json::array();
  for (const auto& m : rep.matrices) mats.push_back(to_json(m));
  return {{"quandle", to_json(rep.quandle)}, {"dim", rep.dim}, {"matrices", std::move(mats)}};
}

QuandleRep rep_from_json(const Json& j) {
  Quandle q = quandle_from_json(field(j, "quandle"));
  const Json& mats = field(j, "matrices");
  if (!mats.is_array()) throw Error(ErrorCode::ParseError, "\"matrices\" must be an array");
  std::vector<Mat> matrices;
  for (const auto& m : mats) matrices.push_back(matrix_from_json(m));
  QuandleRep rep = check_rep(q, std::move(matrices));
  if (j.contains("dim") && get<int>(j, "dim") != rep.dim) {
    throw Error(ErrorCode::ParseError, "\"dim\" disagrees with the matrices");
  }
  return rep;
}

Json to_json(const IrrepLabel& label) {
  return {{"kind", kind_name(label.kind)}, {"lambda", label.lambda}, {"mu", label.mu},
          {"r", label.r},                  {"s", label.s},           {"dim", label.dim}};
}

IrrepLabel label_from_json(const Json& j) {
  IrrepLabel label;
  const auto kind = get<std::string>(j, "kind");
  if (kind == "C") {
    label.kind = IrrepLabel::Kind::C;
  } else if (kind == "W") {
    label.kind = IrrepLabel::Kind::W;
  } else if (kind == "opaque") {
    label.kind = IrrepLabel::Kind::Opaque;
  } else {
    throw Error(ErrorCode::ParseError, "unknown label kind \"" + kind + "\"");
  }
  label.lambda = get<int>(j, "lambda");
  label.mu = get<int>(j, "mu");
  label.r = get<int>(j, "r");
  label.s = get<int>(j, "s");
  label.dim = get<int>(j, "dim");
  return label;
}

Json to_json(const Decomposition& d) {
  Json parts = Json::array();
  for (const auto& p : d.parts) {
    parts.push_back({{"dim", p.space.dim()},
                     {"label", to_json(p.label)},
                     {"label_text", p.label.to_string()},
                     {"name", p.name},
                     {"generator", p.generator},
                     {"basis", to_json(p.space.basis)}});
  }
  return {{"ambient", d.ambient}, {"parts", std::move(parts)}};
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.ambient = get<int>(j, "ambient");
  const Json& parts = field(j, "parts");
  if (!parts.is_array()) throw Error(ErrorCode::ParseError, "\"parts\" must be an array");
  for (const auto& pj : parts) {
    Part p;
    p.space.basis = matrix_from_json(field(pj, "basis"));
    p.label = label_from_json(field(pj, "label"));
    p.name = get<std::string>(pj, "name");
    p.generator = get<std::string>(pj, "generator");
    if (p.space.ambient() != d.ambient || p.space.dim() != get<int>(pj, "dim")) {
      throw Error(ErrorCode::ParseError, "part basis shape disagrees with \"ambient\"/\"dim\"");
    }
    d.parts.push_back(std::move(p));
  }
  return d;
}

Json to_json(const Classification& c) {
  Json classes = Json::array();
  for (const auto& k : c.classes) classes.push_back({{"rep_log", k.rep_log}, {"member_logs", k.member_logs}});
  return {{"q", c.q}, {"p", c.p}, {"n", c.n}, {"classes", std::move(classes)}, {"count", c.count()}};
}

Classification classification_from_json(const Json& j) {
  Classification c;
  c.q = get<int>(j, "q");
  c.p = get<int>(j, "p");
  c.n = get<int>(j, "n");
  const FieldTable f = FieldTable::of_order(c.q);
  for (const auto& kj : field(j, "classes")) {
    PrimClass k;
    k.rep_log = get<int>(kj, "rep_log");
    k.member_logs = get<std::vector<int>>(kj, "member_logs");
    k.representative = f.exp(k.rep_log);
    for (int l : k.member_logs) k.members.push_back(f.exp(l));
    c.classes.push_back(std::move(k));
  }
  if (get<std::size_t>(j, "count") != c.count()) throw Error(ErrorCode::ParseError, "\"count\" disagrees with \"classes\"");
  return c;
}

Json to_json(const AppendixRow& row) {
  return {{"q", row.q},
          {"alpha_log", row.alpha_log},
          {"fixed_point", optional_json(row.fixed_point)},
          {"expected_fixed_point", optional_json(row.expected_fixed_point)},
          {"gcd_degree", row.gcd_degree},
          {"no_common_solution", row.no_common_solution},
          {"no_fixed_point", row.no_fixed_point},
          {"sum_identity", row.sum_identity}};
}

AppendixRow appendix_row_from_json(const Json& j) {
  AppendixRow row;
  row.q = get<int>(j, "q");
  row.alpha_log = get<int>(j, "alpha_log");
  row.fixed_point = optional_get<int>(j, "fixed_point");
  row.expected_fixed_point = optional_get<int>(j, "expected_fixed_point");
  row.gcd_degree = get<int>(j, "gcd_degree");
  row.no_common_solution = get<bool>(j, "no_common_solution");
  row.no_fixed_point = get<bool>(j, "no_fixed_point");
  row.sum_identity = get<bool>(j, "sum_identity");
  return row;
}

Json to_json(const S3HomReport& r) {
  return {{"image", r.image},
          {"map", r.map},
          {"pairs_checked", r.pairs_checked},
          {"quandle_law_failures", r.quandle_law_failures},
          {"group_law_failures", r.group_law_failures},
          {"exhibit", Json::array({r.exhibit.first, r.exhibit.second})},
          {"exhibit_product", r.exhibit_product},
          {"exhibit_image_product", r.exhibit_image_product},
          {"quandle_hom", r.quandle_hom()},
          {"group_hom", r.group_hom()}};
}

S3HomReport s3_report_from_json(const Json& j) {
  S3HomReport r;
  r.image = get<int>(j, "image");
  r.map = get<std::vector<int>>(j, "map");
  r.pairs_checked = get<int>(j, "pairs_checked");
  r.quandle_law_failures = get<int>(j, "quandle_law_failures");
  r.group_law_failures = get<int>(j, "group_law_failures");
  r.exhibit = get<std::pair<int, int>>(j, "exhibit");
  r.exhibit_product = get<int>(j, "exhibit_product");
  r.exhibit_image_product = get<int>(j, "exhibit_image_product");
  return r;
}

Json to_json(const MaschkeReport& r) {
  Json mult = Json::array();
  for (const auto& e : r.multiplicities) {
    mult.push_back({{"lambda", complex_json(e.lambda)}, {"geometric", e.geometric}, {"algebraic", e.algebraic}});
  }
  return {{"rep", to_json(r.rep)},
          {"multiplicities", std::move(mult)},
          {"criterion_lhs", r.criterion_lhs},
          {"criterion_rhs", r.criterion_rhs},
          {"criterion_holds", r.criterion_holds},
          {"socle_dim", r.socle_dim},
          {"completely_reducible", r.completely_reducible},
          {"line_invariant", r.line_invariant},
          {"line_has_complement", r.line_has_complement}};
}

MaschkeReport maschke_report_from_json(const Json& j) {
  MaschkeReport r(rep_from_json(field(j, "rep")));
  for (const auto& ej : field(j, "multiplicities")) {
    r.multiplicities.push_back({complex_from_json(field(ej, "lambda")), get<int>(ej, "geometric"), get<int>(ej, "algebraic")});
  }
  r.criterion_lhs = get<int>(j, "criterion_lhs");
  r.criterion_rhs = get<int>(j, "criterion_rhs");
  r.criterion_holds = get<bool>(j, "criterion_holds");
  r.socle_dim = get<int>(j, "socle_dim");
  r.completely_reducible = get<bool>(j, "completely_reducible");
  r.line_invariant = get<bool>(j, "line_invariant");
  r.line_has_complement = get<bool>(j, "line_has_complement");
  return r;
}

InfoSummary summarize(const Quandle& q, std::size_t inn_cap) {
  InfoSummary s;
  s.label = q.label();
  s.order = q.order();
  s.orbits = orbits(q);
  s.connected = s.orbits.size() == 1;
  try {
    const PermGroup inn = inner_group(q, inn_cap);
    s.inn_order = static_cast<long long>(inn.order());
    if (const auto w = recognize_dihedral(inn)) s.inn_dihedral = w->m;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClosureBudgetExceeded) throw;
  }
  if (q.order() > 2) s.cyclic_type = is_cyclic_type(q);
  s.dihedral_n = dihedral_order(q);
  return s;
}

Json to_json(const InfoSummary& s) {
  return {{"label", s.label},
          {"order", s.order},
          {"orbits", s.orbits},
          {"connected", s.connected},
          {"inn_order", s.inn_order},
          {"inn_dihedral", optional_json(s.inn_dihedral)},
          {"cyclic_type", optional_json(s.cyclic_type)},
          {"dihedral_n", optional_json(s.dihedral_n)}};
}

InfoSummary info_from_json(const Json& j) {
  InfoSummary s;
  s.label = get<std::string>(j, "label");
  s.order = get<int>(j, "order");
  s.orbits = get<std::vector<std::vector<int>>>(j, "orbits");
  s.connected = get<bool>(j, "connected");
  s.inn_order = get<long long>(j, "inn_order");
  s.inn_dihedral = optional_get<int>(j, "inn_dihedral");
  s.cyclic_type = optional_get<bool>(j, "cyclic_type");
  s.dihedral_n = optional_get<int>(j, "dihedral_n");
  return s;
}

Json to_json(const NormalizeResult& r) {
  return {{"q", r.q}, {"alpha_log", r.alpha_log}, {"word", r.word}, {"normal_form", r.normal_form}, {"field_value", r.field_value}};
}

NormalizeResult normalize_result_from_json(const Json& j) {
  return {get<int>(j, "q"), get<int>(j, "alpha_log"), get<std::string>(j, "word"), get<std::string>(j, "normal_form"),
          get<std::string>(j, "field_value")};
}

Json to_json(const IsoResult& r) {
  return {{"a", r.a}, {"b", r.b}, {"isomorphic", r.map.has_value()}, {"map", optional_json(r.map)}};
}

IsoResult iso_result_from_json(const Json& j) {
  return {get<std::string>(j, "a"), get<std::string>(j, "b"), optional_get<std::vector<int>>(j, "map")};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::ParseError, "write failed for " + path.string());
}

}  // namespace quandle_lab
