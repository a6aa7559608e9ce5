// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "quandle_lab/cyclic_reps.hpp"
#include "quandle_lab/dihedral.hpp"
#include "quandle_lab/error.hpp"
#include "quandle_lab/isomorphism.hpp"
#include "quandle_lab/maschke.hpp"
#include "quandle_lab/polysys.hpp"
#include "quandle_lab/presentation.hpp"
#include "quandle_lab/representation.hpp"

using namespace quandle_lab;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

std::vector<std::string> texts(const Decomposition& d) {
  std::vector<std::string> out;
  for (const auto& p : d.parts) out.push_back(p.label.to_string());
  return out;
}

std::vector<IrrepLabel> formula_labels(int n) {
  std::vector<IrrepLabel> out;
  if (n % 4 == 0) {
    out = {IrrepLabel::c(1, 1), IrrepLabel::c(1, 1), IrrepLabel::c(1, -1), IrrepLabel::c(-1, 1)};
    for (int s = 1; s <= n / 4 - 1; ++s) out.insert(out.end(), 2, IrrepLabel::w(n / 2, s));
  } else if (n % 4 == 2) {
    out = {IrrepLabel::c(1, 1), IrrepLabel::c(1, 1)};
    for (int s = 1; s <= (n - 2) / 4; ++s) out.insert(out.end(), 2, IrrepLabel::w(n / 2, s));
  } else {
    out = {IrrepLabel::c(1, 1)};
    for (int s = 1; s <= (n - 1) / 2; ++s) out.push_back(IrrepLabel::w(n, 2 * s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ac1(Outcome& o) {
  const std::vector<std::pair<int, std::vector<std::string>>> tables{
      {10, {"C(1,1)", "C(1,1)", "W(ω_5)", "W(ω_5^2)", "W(ω_5)", "W(ω_5^2)"}},
      {11, {"C(1,1)", "W(ω_11^2)", "W(ω_11^4)", "W(ω_11^6)", "W(ω_11^8)", "W(ω_11^10)"}},
      {12, {"C(1,1)", "C(1,1)", "W(ω_6)", "W(ω_6^2)", "C(−1,1)", "W(ω_6)", "W(ω_6^2)", "C(1,−1)"}},
  };
  const std::vector<std::vector<int>> dims{{1, 1, 2, 2, 2, 2}, {1, 2, 2, 2, 2, 2}, {1, 1, 2, 2, 1, 2, 2, 1}};
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const int n = tables[i].first;
    const Decomposition d = decompose(regular_rep(Quandle::dihedral(n)));
    o.require(d.dims() == dims[i], "Z_" + std::to_string(n) + " dimensions differ; ");
    o.require(texts(d) == tables[i].second, "Z_" + std::to_string(n) + " labels differ; ");
  }
  double worst = 0.0;
  for (int n = 3; n <= 24; ++n) {
    const QuandleRep rep = regular_rep(Quandle::dihedral(n));
    const Decomposition d = decompose(rep);
    o.require(d.label_multiset() == formula_labels(n), "n = " + std::to_string(n) + " misses the formula; ");
    int total = 0;
    for (const auto& p : d.parts) {
      worst = std::max(worst, max_invariance_residual(rep, p.space));
      total += p.space.dim();
    }
    o.require(total == n, "n = " + std::to_string(n) + " dimensions do not sum; ");
  }
  o.require(worst <= 1e-9, "invariance residual too large; ");
  o.detail << "max invariance residual " << worst;
}

void ac2(Outcome& o) {
  for (int n = 3; n <= 24; ++n) {
    o.require(dihedral_closed_form(n).label_multiset() == decompose(regular_rep(Quandle::dihedral(n))).label_multiset(),
              "n = " + std::to_string(n) + " disagrees; ");
  }
  o.detail << "22 values of n";
}

void ac3(Outcome& o) {
  for (int q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 125}) {
    const auto pp = prime_power(q);
    const Classification c = classify_cyclic(q);
    o.require(static_cast<long long>(c.count()) == euler_phi(q - 1) / pp->second, "q = " + std::to_string(q) + " count; ");
  }
  const FieldTable f = FieldTable::build(5, 3, PolyZp{1, 1, 0, 1});
  const FieldElem alpha = f.from_coeffs(std::vector<int>{2, 1, 2});
  const FieldElem beta = f.from_coeffs(std::vector<int>{1, 2, 3});
  const FieldElem gamma = f.from_coeffs(std::vector<int>{3, 4, 3});
  o.require(classify_cyclic(f).count() == 20, "GF(125) class count; ");
  o.require(prime_power_equivalent(f, alpha, beta), "alpha ~ beta fails; ");
  o.require(!prime_power_equivalent(f, alpha, gamma), "alpha ~ gamma holds; ");
  o.detail << "12 field orders, GF(125) has " << classify_cyclic(f).count() << " classes";
}

void ac4(Outcome& o) {
  int pairs = 0;
  for (int q = 3; q <= 16; ++q) {
    if (!prime_power(q)) continue;
    const FieldTable f = FieldTable::of_order(q);
    const auto prim = f.primitive_elements();
    for (FieldElem a : prim) {
      for (FieldElem b : prim) {
        const Quandle qa = Quandle::alexander(f, a);
        const Quandle qb = Quandle::alexander(f, b);
        const auto iso = find_isomorphism(qa, qb);
        const bool equivalent = prime_power_equivalent(f, a, b);
        o.require(iso.has_value() == equivalent,
                  "q = " + std::to_string(q) + " (" + f.to_string(a) + ", " + f.to_string(b) + "); ");
        if (iso) o.require(is_isomorphism(qa, qb, *iso), "returned map is not an isomorphism; ");
        ++pairs;
      }
    }
  }
  o.detail << pairs << " ordered pairs";
}

void ac5(Outcome& o) {
  int cases = 0;
  std::size_t words = 0;
  for (int q = 3; q <= 16; ++q) {
    if (!prime_power(q)) continue;
    const FieldTable f = FieldTable::of_order(q);
    for (FieldElem a : f.primitive_elements()) {
      const PresentationReport r = verify_presentation_iso(f, a, 6);
      o.require(r.passed(), "q = " + std::to_string(q) + " alpha " + f.to_string(a) + "; ");
      words += r.words_checked;
      ++cases;
    }
  }
  o.detail << cases << " (q, alpha) pairs, " << words << " words";
}

void ac6(Outcome& o) {
  const auto rows = verify_appendix(128, false);
  for (const auto& r : rows) {
    const std::string tag = "q = " + std::to_string(r.q) + " log " + std::to_string(r.alpha_log) + "; ";
    o.require(r.no_common_solution && r.gcd_degree == 0, "non-constant gcd at " + tag);
    o.require(r.fixed_point.has_value() && r.fixed_point == r.expected_fixed_point, "fixed point at " + tag);
  }
  o.require(!rows.empty(), "no rows; ");
  o.detail << rows.size() << " (q, alpha) pairs";
}

void ac7(Outcome& o) {
  const Mat b = (Mat(2, 2) << 1.0, 1.0, 0.0, 1.0).finished();
  Mat e1 = Mat::Zero(2, 1);
  e1(0, 0) = 1.0;
  const Subspace line{e1};
  auto check = [&](const MaschkeReport& r, const std::string& tag) {
    o.require(inspect_rep(r.rep.quandle, r.rep.matrices).ok(), tag + " is not a representation; ");
    o.require(max_invariance_residual(r.rep, line) < 1e-12, tag + " line not invariant; ");
    o.require(!invariant_complement_exists(r.rep, line).has_value(), tag + " complement found; ");
    o.require(r.criterion_holds, tag + " multiplicity criterion fails; ");
  };
  for (int n = 2; n <= 6; ++n) check(build_maschke_counterexample(n, b), "n = " + std::to_string(n));
  check(build_trivial_counterexample(b), "trivial");
  o.detail << "n = 2..6 and the one-element quandle";
}

void ac8(Outcome& o) {
  for (int n = 3; n <= 40; ++n) {
    const PermGroup g = inner_group(Quandle::dihedral(n));
    const std::size_t expected = n % 2 == 0 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(2 * n);
    o.require(g.order() == expected, "n = " + std::to_string(n) + " order; ");
    const auto w = recognize_dihedral(g);
    o.require(w.has_value() && 2 * static_cast<std::size_t>(w->m) == g.order(), "n = " + std::to_string(n) + " not dihedral; ");
  }
  o.detail << "3 <= n <= 40";
}

void ac9(Outcome& o) {
  const S3HomReport r = quandle_hom_not_group_hom_demo();
  o.require(r.pairs_checked == 36, "pair count; ");
  o.require(r.quandle_hom(), "quandle law fails; ");
  o.require(!r.group_hom(), "group law holds; ");
  const GroupTable s3 = GroupTable::s3();
  o.require(r.exhibit_product == s3.identity(), "q(theta r) is not 1; ");
  o.require(r.exhibit_image_product != s3.identity(), "q(theta)q(r) is 1; ");
  o.detail << "q(theta r) = " << s3.names[r.exhibit_product] << ", q(theta)q(r) = " << s3.names[r.exhibit_image_product];
}

void ac10(Outcome& o) {
  int runs = 0;
  int restarts = 0;
  int at_j = 0;
  double best_away = INFINITY;
  for (int q : {5, 7}) {
    const FieldTable f = FieldTable::of_order(q);
    const Presentation pres(f, f.generator());
    for (int d : {2, 3}) {
      std::vector<JordanSpec> specs;
      std::vector<cd> roots;
      std::vector<cd> reals;
      for (int k = 0; k < d; ++k) {
        roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / (d * (q - 1))));
        reals.push_back(static_cast<double>(k + 1));
      }
      specs.push_back(JordanSpec::diagonal(roots));
      specs.push_back(JordanSpec::diagonal(reals));
      for (const JordanSpec& spec : specs) {
        RigidityOptions opts;
        opts.restarts = 200;
        opts.seed = 1000 + static_cast<std::uint64_t>(10 * q + d);
        opts.residual_tol = 1e-6;
        const RigidityReport r = rigidity_check(spec, pres, opts);
        o.require(r.passed(), "q = " + std::to_string(q) + " " + spec.to_string() + " has a second solution; ");
        o.require(r.restarts >= 200, "too few restarts; ");
        best_away = std::min(best_away, r.best_residual_away);
        restarts += r.restarts;
        at_j += r.converged_to_j;
        ++runs;
      }
    }
  }
  o.detail << runs << " specs, " << restarts << " restarts (" << at_j << " ended at J), smallest residual away from J " << best_away;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;  // 0: none
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "dihedral decomposition tables and formulas", 10.0, ac1},
      {"AC2", "closed form and generic decomposition agree", 0.0, ac2},
      {"AC3", "classification counts", 5.0, ac3},
      {"AC4", "classification matches isomorphism search", 30.0, ac4},
      {"AC5", "presentation soundness", 60.0, ac5},
      {"AC6", "polynomial system has no solution, odd q <= 128", 0.0, ac6},
      {"AC7", "complete reducibility fails", 0.0, ac7},
      {"AC8", "inner groups are dihedral", 0.0, ac8},
      {"AC9", "quandle homomorphism that is not a group homomorphism", 0.0, ac9},
      {"AC10", "rigidity falsification search", 60.0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.ok = false;
      o.detail << "; over the " << c.budget_s << " s budget";
    }
    std::printf("%-4s %s  %s (%.2f s): %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
