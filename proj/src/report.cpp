#include "quandle_lab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace quandle_lab {

namespace {

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string render(const TextTable& t, Format format) {
  return format == Format::Csv ? render_csv(t) : render_text(t);
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string complex_text(cd c) {
  char buf[64];
  if (std::abs(c.imag()) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%.6g", c.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", c.real(), c.imag());
  }
  return buf;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::size_t display_width(std::string_view s) {
  std::size_t width = 0;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    char32_t cp = c;
    if (c >= 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else if (c >= 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xC0) {
      len = 2;
      cp = c & 0x1F;
    }
    for (std::size_t k = 1; k < len && i + k < s.size(); ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    if (!(cp >= 0x300 && cp <= 0x36F)) ++width;
    i += len;
  }
  return width;
}

std::string render_text(const TextTable& t) {
  std::vector<std::size_t> widths(t.headers.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
  };
  widen(t.headers);
  for (const auto& r : t.rows) widen(r);
  std::string out;
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t c = 0; c < row.size(); ++c) {
      s += row[c];
      if (c + 1 < row.size()) s += std::string(widths[c] - display_width(row[c]) + 2, ' ');
    }
    out += s + "\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string render_csv(const TextTable& t) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + cell(row[c]);
    out += "\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::vector<const Part*> report_order(const Decomposition& d, bool table_order) {
  std::vector<const Part*> parts;
  for (const auto& p : d.parts) parts.push_back(&p);
  if (!table_order) {
    std::stable_sort(parts.begin(), parts.end(), [](const Part* a, const Part* b) {
      if (a->space.dim() != b->space.dim()) return a->space.dim() < b->space.dim();
      return a->label < b->label;
    });
  }
  return parts;
}

std::string export_report(const Decomposition& d, Format format, bool table_order) {
  const auto order = report_order(d, table_order);
  if (format == Format::Json) {
    Decomposition sorted;
    sorted.ambient = d.ambient;
    for (const Part* p : order) sorted.parts.push_back(*p);
    return json_text(to_json(sorted));
  }
  TextTable t{{"dim", "label", "name", "generated by"}, {}};
  for (const Part* p : order) {
    t.rows.push_back({std::to_string(p->space.dim()), p->label.to_string(), p->name.empty() ? "-" : p->name,
                      p->generator.empty() ? "-" : p->generator});
  }
  if (format == Format::Csv) return render_csv(t);
  return "ambient dimension " + std::to_string(d.ambient) + ", " + std::to_string(d.parts.size()) + " irreducible parts\n" +
         render_text(t);
}

std::string export_report(const Classification& c, Format format) {
  if (format == Format::Json) return json_text(to_json(c));
  TextTable t{{"rep_log", "member_logs"}, {}};
  for (const auto& k : c.classes) t.rows.push_back({std::to_string(k.rep_log), join(k.member_logs, " ")});
  if (format == Format::Csv) return render_csv(t);
  return "GF(" + std::to_string(c.q) + ") = GF(" + std::to_string(c.p) + "^" + std::to_string(c.n) + "): " +
         std::to_string(c.count()) + " classes\n" + render_text(t);
}

std::string export_report(const std::vector<AppendixRow>& rows, Format format) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return json_text(arr);
  }
  TextTable t{{"q", "alpha_log", "fixed_point", "expected", "gcd_degree", "sum_identity", "verdict"}, {}};
  for (const auto& r : rows) {
    std::string verdict = r.no_common_solution ? "no common root" : "COMMON ROOT";
    if (r.no_fixed_point) verdict += " (char 2, no fixed point)";
    t.rows.push_back({std::to_string(r.q), std::to_string(r.alpha_log), opt(r.fixed_point), opt(r.expected_fixed_point),
                      std::to_string(r.gcd_degree), r.no_fixed_point ? "-" : yes_no(r.sum_identity), verdict});
  }
  return render(t, format);
}

std::string export_report(const InfoSummary& s, Format format) {
  if (format == Format::Json) return json_text(to_json(s));
  std::vector<std::string> orbit_text;
  for (const auto& o : s.orbits) orbit_text.push_back("{" + join(o, ",") + "}");
  std::string orbits_joined;
  for (std::size_t i = 0; i < orbit_text.size(); ++i) orbits_joined += (i ? " " : "") + orbit_text[i];
  TextTable t{{"field", "value"},
              {{"label", s.label.empty() ? "-" : s.label},
               {"order", std::to_string(s.order)},
               {"orbits", orbits_joined},
               {"connected", yes_no(s.connected)},
               {"inn_order", s.inn_order < 0 ? "over cap" : std::to_string(s.inn_order)},
               {"inn_type", s.inn_dihedral ? "D_" + std::to_string(*s.inn_dihedral) : "-"},
               {"cyclic_type", s.cyclic_type ? yes_no(*s.cyclic_type) : "-"},
               {"dihedral_n", opt(s.dihedral_n)}}};
  return render(t, format);
}

std::string export_report(const S3HomReport& r, Format format) {
  if (format == Format::Json) return json_text(to_json(r));
  const GroupTable g = GroupTable::s3();
  auto name = [&](int x) { return g.names.empty() ? std::to_string(x) : g.names[x]; };
  TextTable t{{"x", "f(x)"}, {}};
  for (int x = 0; x < g.order; ++x) t.rows.push_back({name(x), name(r.map[x])});
  if (format == Format::Csv) return render_csv(t);
  std::ostringstream os;
  os << render_text(t);
  os << "pairs checked: " << r.pairs_checked << "\n";
  os << "quandle law failures: " << r.quandle_law_failures << "\n";
  os << "group law failures: " << r.group_law_failures << "\n";
  const auto [a, b] = r.exhibit;
  os << "f(" << name(a) << " * " << name(b) << ") = " << name(r.exhibit_product) << ", f(" << name(a) << ") * f(" << name(b)
     << ") = " << name(r.exhibit_image_product) << "\n";
  os << "quandle homomorphism: " << yes_no(r.quandle_hom()) << ", group homomorphism: " << yes_no(r.group_hom()) << "\n";
  return os.str();
}

std::string export_report(const MaschkeReport& r, Format format) {
  if (format == Format::Json) return json_text(to_json(r));
  TextTable t{{"eigenvalue", "geometric", "algebraic"}, {}};
  for (const auto& e : r.multiplicities) {
    t.rows.push_back({complex_text(e.lambda), std::to_string(e.geometric), std::to_string(e.algebraic)});
  }
  if (format == Format::Csv) return render_csv(t);
  std::ostringstream os;
  os << "quandle " << (r.rep.quandle.label().empty() ? "-" : r.rep.quandle.label()) << " of order " << r.rep.quandle.order()
     << ", dimension " << r.rep.dim << "\n";
  os << render_text(t);
  os << "1 + sum geometric = " << r.criterion_lhs << ", sum algebraic = " << r.criterion_rhs
     << (r.criterion_holds ? " (equal)" : " (differ)") << "\n";
  os << "socle dimension: " << r.socle_dim << ", completely reducible: " << yes_no(r.completely_reducible) << "\n";
  os << "span{e1} invariant: " << yes_no(r.line_invariant) << ", has invariant complement: " << yes_no(r.line_has_complement)
     << "\n";
  return os.str();
}

std::string export_report(const NormalizeResult& r, Format format) {
  if (format == Format::Json) return json_text(to_json(r));
  if (format == Format::Csv) {
    return render_csv({{"q", "alpha_log", "word", "normal_form", "field_value"},
                       {{std::to_string(r.q), std::to_string(r.alpha_log), r.word, r.normal_form, r.field_value}}});
  }
  return r.normal_form + "\n";
}

std::string export_report(const IsoResult& r, Format format) {
  if (format == Format::Json) return json_text(to_json(r));
  if (format == Format::Csv) {
    return render_csv({{"a", "b", "isomorphic", "map"}, {{r.a, r.b, yes_no(r.map.has_value()), r.map ? join(*r.map, " ") : ""}}});
  }
  if (!r.map) return "not isomorphic\n";
  return "isomorphic: " + join(*r.map, " ") + "\n";
}

}  // namespace quandle_lab
