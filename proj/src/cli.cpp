#include "quandle_lab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quandle_lab/dihedral.hpp"
#include "quandle_lab/error.hpp"
#include "quandle_lab/io.hpp"
#include "quandle_lab/isomorphism.hpp"
#include "quandle_lab/maschke.hpp"
#include "quandle_lab/polysys.hpp"
#include "quandle_lab/presentation.hpp"
#include "quandle_lab/report.hpp"

namespace quandle_lab {

namespace {

struct AlphaArgs {
  std::optional<int> log;
  std::optional<int> value;
  std::string poly;
};

void add_alpha_options(CLI::App* cmd, AlphaArgs& a) {
  auto* log = cmd->add_option("--alpha-log", a.log, "discrete log of alpha relative to the default primitive element");
  auto* value = cmd->add_option("--alpha", a.value, "alpha by element index (the integer itself when q is prime)")
                    ->excludes(log);
  cmd->add_option("--alpha-poly", a.poly, "alpha as little-endian coefficients \"c0,c1,...\"")->excludes(log)->excludes(value);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer \"" + item + "\" in \"" + text + "\"");
    }
  }
  return out;
}

FieldElem resolve_alpha(const FieldTable& field, const AlphaArgs& a) {
  FieldElem alpha = field.generator();
  if (!a.poly.empty()) {
    const auto coeffs = parse_int_list(a.poly);
    if (static_cast<int>(coeffs.size()) > field.degree()) {
      throw Error(ErrorCode::InvalidParams, "--alpha-poly has more than " + std::to_string(field.degree()) + " coefficients");
    }
    for (int c : coeffs) {
      if (c < 0 || c >= field.characteristic()) throw Error(ErrorCode::InvalidParams, "--alpha-poly coefficients must lie in [0, p)");
    }
    alpha = field.from_coeffs(coeffs);
  } else if (a.value) {
    if (*a.value < 0 || *a.value >= field.order()) {
      throw Error(ErrorCode::InvalidParams, "--alpha must lie in [0, " + std::to_string(field.order()) + ")");
    }
    alpha = FieldElem{static_cast<std::uint32_t>(*a.value)};
  } else if (a.log) {
    alpha = field.exp(*a.log);
  }
  if (!field.is_primitive(alpha)) {
    throw Error(ErrorCode::NotPrimitive, field.to_string(alpha) + " does not generate GF(" + std::to_string(field.order()) + ")^*");
  }
  return alpha;
}

Mat parse_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<double> r;
    std::stringstream rs(row);
    std::string item;
    while (std::getline(rs, item, ',')) {
      try {
        r.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad matrix entry \"" + item + "\"");
      }
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix");
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error(ErrorCode::ParseError, "matrix rows must have equal length");
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
  }
  return m;
}

GroupTable named_group(const std::string& name, int n) {
  if (name == "s3") return GroupTable::s3();
  if (name == "cyclic") return GroupTable::cyclic(n);
  if (name == "symmetric") return GroupTable::symmetric(n);
  throw Error(ErrorCode::InvalidParams, "unknown group \"" + name + "\" (s3, cyclic, symmetric)");
}

bool is_check_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::VerificationFailure:
    case ErrorCode::RelationViolation:
    case ErrorCode::NotBijective:
    case ErrorCode::RewriteMismatch:
    case ErrorCode::NotInvolution:
      return true;
    default:
      return false;
  }
}

struct Options {
  bool json = false;
  std::string format = "text";
  bool serial = false;

  // new
  std::string kind;
  int n = 0;
  long long q = 0;
  std::string group = "s3";
  std::string output;
  AlphaArgs alpha;

  std::string file;
  std::string file_b;

  // rep decompose
  bool closed_form = false;
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  bool table_order = false;
  std::string export_rep;

  // classify
  bool verify_iso = false;
  int iso_max_order = 32;

  std::string word;

  int qmax = 0;
  bool include_char2 = false;

  std::string b = "1,1;0,1";
  bool trivial = false;
  int image = 1;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {
    if (o.json) {
      format_ = Format::Json;
    } else if (const auto f = parse_format(o.format)) {
      format_ = *f;
    } else {
      throw CLI::ValidationError("--format", "must be text, json or csv");
    }
    exec_ = o.serial ? Exec::Serial : Exec::Parallel;
  }

  int cmd_new() {
    Quandle q = Quandle::trivial(1);
    if (o_.kind == "dihedral") {
      if (o_.n < 1) throw Error(ErrorCode::InvalidParams, "--n must be positive");
      q = Quandle::dihedral(o_.n);
    } else if (o_.kind == "trivial") {
      if (o_.n < 1) throw Error(ErrorCode::InvalidParams, "--n must be positive");
      q = Quandle::trivial(o_.n);
    } else if (o_.kind == "alexander") {
      const FieldTable field = FieldTable::of_order(o_.q);
      q = Quandle::alexander(field, resolve_alpha(field, o_.alpha));
    } else if (o_.kind == "conjugation") {
      q = Quandle::conjugation(named_group(o_.group, o_.n));
    } else if (o_.kind == "core") {
      q = Quandle::core(named_group(o_.group, o_.n));
    }
    const Json j = to_json(q);
    if (o_.output.empty()) {
      out_ << j.dump(2) << "\n";
    } else {
      write_json_file(o_.output, j);
      out_ << "wrote " << o_.output << " (order " << q.order() << ")\n";
    }
    return kExitOk;
  }

  int cmd_check() {
    const TableData data = table_from_json(read_json_file(o_.file));
    const AxiomReport report = check_axioms(data.order, data.table);
    if (format_ == Format::Json) {
      Json failures = Json::array();
      for (const auto& f : report.failures) {
        failures.push_back({{"axiom", to_string(f.axiom)}, {"x", f.x}, {"y", f.y}, {"z", f.z}});
      }
      out_ << Json{{"order", data.order}, {"rack", report.rack}, {"quandle", report.quandle}, {"failures", failures}}.dump(2)
           << "\n";
    } else {
      TextTable t{{"axiom", "x", "y", "z"}, {}};
      for (const auto& f : report.failures) {
        t.rows.push_back({std::string(to_string(f.axiom)), std::to_string(f.x), std::to_string(f.y), std::to_string(f.z)});
      }
      if (format_ == Format::Csv) {
        out_ << render_csv(t);
      } else {
        out_ << "order " << data.order << ": rack " << (report.rack ? "yes" : "no") << ", quandle "
             << (report.quandle ? "yes" : "no") << "\n";
        if (!t.rows.empty()) out_ << render_text(t);
      }
    }
    return report.quandle ? kExitOk : kExitCheckFailed;
  }

  int cmd_info() {
    const Quandle q = quandle_from_json(read_json_file(o_.file));
    out_ << export_report(summarize(q), format_);
    return kExitOk;
  }

  int cmd_iso() {
    const Quandle a = quandle_from_json(read_json_file(o_.file));
    const Quandle b = quandle_from_json(read_json_file(o_.file_b));
    IsoOptions options;
    options.exec = exec_;
    IsoResult r{o_.file, o_.file_b, find_isomorphism(a, b, options)};
    out_ << export_report(r, format_);
    return kExitOk;
  }

  int cmd_decompose() {
    const Json j = read_json_file(o_.file);
    const QuandleRep rep = j.contains("matrices") ? rep_from_json(j) : regular_rep(quandle_from_json(j));
    if (!o_.export_rep.empty()) write_json_file(o_.export_rep, to_json(rep));

    DecomposeOptions options;
    options.tol = o_.tol;
    options.seed = o_.seed ? *o_.seed : default_seed();
    options.exec = exec_;
    const Decomposition generic = decompose(rep, options);
    if (!o_.closed_form) {
      out_ << export_report(generic, format_, o_.table_order);
      return kExitOk;
    }

    const auto n = dihedral_order(rep.quandle);
    if (!n || j.contains("matrices")) {
      throw Error(ErrorCode::InvalidParams, "--closed-form needs the regular representation of a dihedral quandle Z_n, n >= 3");
    }
    const Decomposition closed = dihedral_closed_form(*n);
    out_ << export_report(closed, format_, o_.table_order);
    if (closed.label_multiset() != generic.label_multiset()) {
      err_ << "closed form and generic decomposition disagree on the label multiset\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  }

  int cmd_classify() {
    const FieldTable field = FieldTable::of_order(o_.q);
    const Classification c = classify_cyclic(field);
    const long long expected = euler_phi(c.q - 1) / c.n;
    bool ok = static_cast<long long>(c.count()) == expected;

    Json verify;
    std::string verify_text;
    if (o_.verify_iso) {
      const bool search = c.q <= o_.iso_max_order;
      int checks = 0;
      int failures = 0;
      IsoOptions iso;
      iso.exec = exec_;
      auto same = [&](FieldElem a, FieldElem b) {
        ++checks;
        if (!search) return log_identity_check(field, a, b);
        return find_isomorphism(Quandle::alexander(field, a), Quandle::alexander(field, b), iso).has_value();
      };
      for (const auto& k : c.classes) {
        for (FieldElem m : k.members) failures += same(k.representative, m) ? 0 : 1;
      }
      for (std::size_t i = 0; i < c.classes.size(); ++i) {
        for (std::size_t k = i + 1; k < c.classes.size(); ++k) {
          failures += same(c.classes[i].representative, c.classes[k].representative) ? 1 : 0;
        }
      }
      ok = ok && failures == 0;
      const std::string method = search ? "isomorphism search" : "log identity";
      verify = {{"method", method}, {"checks", checks}, {"failures", failures}};
      verify_text = "verify-iso (" + method + "): " + std::to_string(checks) + " checks, " + std::to_string(failures) +
                    " failures\n";
    }

    if (format_ == Format::Json) {
      Json j = to_json(c);
      if (o_.verify_iso) j["verify_iso"] = verify;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << export_report(c, format_);
      if (format_ == Format::Text) out_ << verify_text;
    }
    if (static_cast<long long>(c.count()) != expected) {
      err_ << "expected " << expected << " classes, found " << c.count() << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
  }

  int cmd_normalize() {
    const Presentation pres(FieldTable::of_order(o_.q), resolve_alpha(FieldTable::of_order(o_.q), o_.alpha));
    const Word w = parse_word(o_.word);
    const CanonicalForm c = pres.normalize(w);
    NormalizeResult r{pres.q(), pres.field().log(pres.alpha()), w.to_string(), c.to_string(),
                      pres.field().to_string(pres.evaluate(c))};
    out_ << export_report(r, format_);
    return kExitOk;
  }

  int cmd_appendix() {
    if (o_.qmax < 4) throw Error(ErrorCode::InvalidParams, "--qmax must be at least 4");
    const auto rows = verify_appendix(o_.qmax, o_.include_char2, exec_);
    int failures = 0;
    for (const auto& r : rows) {
      if (r.no_fixed_point) continue;
      if (!r.no_common_solution || r.fixed_point != r.expected_fixed_point || !r.sum_identity) ++failures;
    }
    out_ << export_report(rows, format_);
    if (format_ == Format::Text) {
      out_ << rows.size() << " (q, alpha) pairs with 3 < q <= " << o_.qmax << ", " << failures
           << " failures in odd characteristic\n";
    }
    return failures == 0 ? kExitOk : kExitCheckFailed;
  }

  int cmd_maschke() {
    const Mat b = parse_matrix(o_.b);
    const MaschkeReport r = o_.trivial ? build_trivial_counterexample(b) : build_maschke_counterexample(o_.n, b);
    out_ << export_report(r, format_);
    // the multiplicity criterion is sufficient for failure of complete reducibility
    return !r.criterion_holds || !r.completely_reducible ? kExitOk : kExitCheckFailed;
  }

  int cmd_s3() {
    const S3HomReport r = quandle_hom_not_group_hom_demo(o_.image);
    out_ << export_report(r, format_);
    const bool shown = r.quandle_hom() && !r.group_hom() && r.exhibit_product != r.exhibit_image_product;
    return shown ? kExitOk : kExitCheckFailed;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  Format format_ = Format::Text;
  Exec exec_ = Exec::Parallel;
};

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("QUANDLE_LAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, std::string("QUANDLE_LAB_SEED is not an unsigned integer: ") + env);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite quandles, their cyclic classification and representations", "quandle"};
  app.fallthrough();
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.add_flag("--json", o.json, "emit JSON");
  app.add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--serial", o.serial, "use the serial reference kernels");

  auto* cmd_new = app.add_subcommand("new", "write a quandle table as JSON");
  cmd_new->add_option("--kind", o.kind, "dihedral, trivial, alexander, conjugation or core")
      ->required()
      ->check(CLI::IsMember({"dihedral", "trivial", "alexander", "conjugation", "core"}));
  cmd_new->add_option("--n", o.n, "order (dihedral, trivial) or group degree (cyclic, symmetric)");
  cmd_new->add_option("--q", o.q, "field order (alexander)");
  cmd_new->add_option("--group", o.group, "s3, cyclic or symmetric (conjugation, core)");
  cmd_new->add_option("-o,--output", o.output, "output path; stdout when omitted");
  add_alpha_options(cmd_new, o.alpha);

  auto* cmd_check = app.add_subcommand("check", "check the rack and quandle axioms of a table");
  cmd_check->add_option("file", o.file)->required();

  auto* cmd_info = app.add_subcommand("info", "orbits, inner group and cyclic type");
  cmd_info->add_option("file", o.file)->required();

  auto* cmd_iso = app.add_subcommand("iso", "search for an isomorphism between two quandles");
  cmd_iso->add_option("a", o.file)->required();
  cmd_iso->add_option("b", o.file_b)->required();

  auto* cmd_rep = app.add_subcommand("rep", "representations");
  cmd_rep->require_subcommand(1);
  auto* cmd_decompose = cmd_rep->add_subcommand("decompose", "split a representation into irreducibles");
  cmd_decompose->add_option("file", o.file, "quandle JSON (regular representation) or representation JSON")->required();
  cmd_decompose->add_flag("--closed-form", o.closed_form, "use the explicit dihedral decomposition and cross-check it");
  cmd_decompose->add_option("--tol", o.tol, "invariance tolerance")->check(CLI::PositiveNumber);
  cmd_decompose->add_option("--seed", o.seed, "random seed (default: QUANDLE_LAB_SEED or 0)");
  cmd_decompose->add_flag("--table-order", o.table_order, "keep the decomposition order instead of (dim, label)");
  cmd_decompose->add_option("--export-rep", o.export_rep, "also write the representation matrices as JSON");

  auto* cmd_classify = app.add_subcommand("classify-cyclic", "prime-power classes of primitive elements of GF(q)");
  auto add_classify = [&](CLI::App* c) {
    c->add_option("--q", o.q, "field order")->required();
    c->add_flag("--verify-iso", o.verify_iso, "confirm the classes against isomorphism of Alexander quandles");
    c->add_option("--iso-max-order", o.iso_max_order, "largest q verified by isomorphism search (log identity above)");
  };
  add_classify(cmd_classify);

  auto* cmd_present = app.add_subcommand("present", "the presented quandle on x, y");
  cmd_present->require_subcommand(1);
  auto* cmd_normalize = cmd_present->add_subcommand("normalize", "rewrite a word to x, y or x*y^r");
  cmd_normalize->add_option("--q", o.q, "field order")->required();
  add_alpha_options(cmd_normalize, o.alpha);
  cmd_normalize->add_option("word", o.word, "word such as \"x*y*x\" or \"(x/y)*x\"")->required();
  auto* cmd_present_classify = cmd_present->add_subcommand("classify", "same as classify-cyclic");
  add_classify(cmd_present_classify);

  auto* cmd_verify = app.add_subcommand("verify", "exhaustive checks");
  cmd_verify->require_subcommand(1);
  auto* cmd_appendix = cmd_verify->add_subcommand("appendix", "log-involution systems have no common root");
  cmd_appendix->add_option("--qmax", o.qmax, "largest field order")->required();
  cmd_appendix->add_flag("--include-char2", o.include_char2, "also list characteristic 2");

  auto* cmd_demo = app.add_subcommand("demo", "worked examples");
  cmd_demo->require_subcommand(1);
  auto* cmd_maschke = cmd_demo->add_subcommand("maschke", "representation with an invariant line and no invariant complement");
  cmd_maschke->add_option("--n", o.n, "uses Z_{2n}, n >= 2")->default_val(2);
  cmd_maschke->add_option("--b", o.b, "image of the odd orbit, rows split by ';'");
  cmd_maschke->add_flag("--trivial", o.trivial, "use the one-element quandle instead");
  auto* cmd_s3 = cmd_demo->add_subcommand("s3-hom", "quandle homomorphism of S3 that is not a group homomorphism");
  cmd_s3->add_option("--image", o.image, "index in S3 of the image of r and r^2")->default_val(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Runner r(o, out, err);
    if (*cmd_new) return r.cmd_new();
    if (*cmd_check) return r.cmd_check();
    if (*cmd_info) return r.cmd_info();
    if (*cmd_iso) return r.cmd_iso();
    if (*cmd_decompose) return r.cmd_decompose();
    if (*cmd_classify || *cmd_present_classify) return r.cmd_classify();
    if (*cmd_normalize) return r.cmd_normalize();
    if (*cmd_appendix) return r.cmd_appendix();
    if (*cmd_maschke) return r.cmd_maschke();
    if (*cmd_s3) return r.cmd_s3();
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_check_failure(e.code()) ? kExitCheckFailed : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace quandle_lab
