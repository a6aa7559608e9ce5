#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "helpers.hpp"
#include "quandle_lab/dihedral.hpp"
#include "quandle_lab/error.hpp"
#include "quandle_lab/representation.hpp"

using namespace quandle_lab;
using test_util::permutation_matrix;
using test_util::rows;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

std::vector<std::string> label_texts(const Decomposition& d) {
  std::vector<std::string> out;
  for (const auto& p : d.parts) out.push_back(p.label.to_string());
  return out;
}

cd root_of_unity(int r, int e) { return std::polar(1.0, 2.0 * std::numbers::pi * e / r); }

void check_decomposition_properties(const QuandleRep& rep, const Decomposition& d) {
  int total = 0;
  for (const auto& p : d.parts) total += p.space.dim();
  CHECK(total == rep.dim);
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Subspace& s = d.parts[i].space;
    CHECK(orthonormality_error(s) <= 1e-9);
    CHECK(max_invariance_residual(rep, s) <= 1e-9);
    CHECK(is_irreducible(rep, s));
    for (std::size_t k = i + 1; k < d.parts.size(); ++k) {
      CHECK((s.basis.adjoint() * d.parts[k].space.basis).norm() <= 1e-9);
    }
  }
}

}  // namespace

TEST_SUITE("representation") {
  TEST_CASE("Z6 regular representation matches the explicit matrices") {
    const QuandleRep rep = regular_rep(Quandle::dihedral(6));
    // x▷t = 2t - x: images of e_0..e_5
    const Mat pi0 = permutation_matrix({0, 5, 4, 3, 2, 1});
    const Mat pi1 = permutation_matrix({2, 1, 0, 5, 4, 3});
    const Mat pi2 = permutation_matrix({4, 3, 2, 1, 0, 5});
    CHECK((rep(0) - pi0).norm() == 0.0);
    CHECK((rep(3) - pi0).norm() == 0.0);
    CHECK((rep(1) - pi1).norm() == 0.0);
    CHECK((rep(4) - pi1).norm() == 0.0);
    CHECK((rep(2) - pi2).norm() == 0.0);
    CHECK((rep(5) - pi2).norm() == 0.0);
    const Mat printed_pi0 = rows({{1, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 1},
                                  {0, 0, 0, 0, 1, 0},
                                  {0, 0, 0, 1, 0, 0},
                                  {0, 0, 1, 0, 0, 0},
                                  {0, 1, 0, 0, 0, 0}});
    CHECK((rep(0) - printed_pi0).norm() == 0.0);
  }

  TEST_CASE("trivial quandle acts by the identity") {
    const QuandleRep rep = regular_rep(Quandle::trivial(4));
    for (const auto& m : rep.matrices) CHECK(m.isIdentity());
  }

  TEST_CASE("check_rep") {
    const Mat b = rows({{1, 1}, {0, 1}});
    const Mat id = Mat::Identity(2, 2);
    std::vector<Mat> maschke;
    for (int x = 0; x < 4; ++x) maschke.push_back(x % 2 == 0 ? id : b);
    CHECK_NOTHROW(check_rep(Quandle::dihedral(4), maschke));
    CHECK_NOTHROW(check_rep(Quandle::trivial(1), {b}));

    const Mat one = Mat::Identity(1, 1);
    const std::vector<Mat> bad{one, 2.0 * one, one};
    CHECK(code_of([&] { check_rep(Quandle::dihedral(3), bad); }) == ErrorCode::NotHomomorphism);
    const RepCheckReport report = inspect_rep(Quandle::dihedral(3), bad);
    CHECK_FALSE(report.ok());
    CHECK(report.max_residual > 0.5);

    CHECK(code_of([&] { check_rep(Quandle::trivial(1), {Mat::Zero(2, 2)}); }) == ErrorCode::Singular);
    CHECK(code_of([&] { check_rep(Quandle::trivial(2), {id}); }) == ErrorCode::InvalidParams);
  }

  TEST_CASE("augmentation split") {
    for (int n : {6, 11}) {
      const QuandleRep rep = regular_rep(Quandle::dihedral(n));
      const auto [ones, zero_sum] = augmentation_split(rep);
      CHECK(ones.dim() == 1);
      CHECK(zero_sum.dim() == n - 1);
      CHECK(max_invariance_residual(rep, ones) < 1e-12);
      CHECK(max_invariance_residual(rep, zero_sum) < 1e-12);
    }
    const QuandleRep scaled = constant_rep(Quandle::trivial(1), 2.0 * Mat::Identity(2, 2));
    CHECK(code_of([&] { augmentation_split(scaled); }) == ErrorCode::InvalidParams);
  }

  TEST_CASE("decompose: Z10 table") {
    const QuandleRep rep = regular_rep(Quandle::dihedral(10));
    const Decomposition d = decompose(rep);
    CHECK(d.dims() == std::vector<int>{1, 1, 2, 2, 2, 2});
    CHECK(label_texts(d) == std::vector<std::string>{"C(1,1)", "C(1,1)", "W(ω_5)", "W(ω_5^2)", "W(ω_5)", "W(ω_5^2)"});
    CHECK(d.parts[2].generator == "Σ_{i=1}^{4} (1−ω_5^i) v_{2i,2i+2}");
    CHECK(d.parts[2].name == "W_{1,0}");
    check_decomposition_properties(rep, d);
  }

  TEST_CASE("decompose: Z11 table") {
    const QuandleRep rep = regular_rep(Quandle::dihedral(11));
    const Decomposition d = decompose(rep);
    CHECK(d.dims() == std::vector<int>{1, 2, 2, 2, 2, 2});
    CHECK(label_texts(d) ==
          std::vector<std::string>{"C(1,1)", "W(ω_11^2)", "W(ω_11^4)", "W(ω_11^6)", "W(ω_11^8)", "W(ω_11^10)"});
    check_decomposition_properties(rep, d);
  }

  TEST_CASE("decompose: Z12 table") {
    const QuandleRep rep = regular_rep(Quandle::dihedral(12));
    const Decomposition d = decompose(rep);
    CHECK(d.dims() == std::vector<int>{1, 1, 2, 2, 1, 2, 2, 1});
    CHECK(label_texts(d) == std::vector<std::string>{"C(1,1)", "C(1,1)", "W(ω_6)", "W(ω_6^2)", "C(−1,1)", "W(ω_6)",
                                                     "W(ω_6^2)", "C(1,−1)"});
    check_decomposition_properties(rep, d);
  }

  TEST_CASE("decompose: non-dihedral quandles") {
    const Decomposition t3 = decompose(regular_rep(Quandle::trivial(3)));
    CHECK(t3.dims() == std::vector<int>{1, 1, 1});
    const Decomposition t1 = decompose(regular_rep(Quandle::trivial(1)));
    CHECK(t1.dims() == std::vector<int>{1});

    const FieldTable gf5 = FieldTable::of_order(5);
    std::vector<QuandleRep> reps{regular_rep(Quandle::alexander(gf5, gf5.from_int(2))),
                                 regular_rep(Quandle::core(GroupTable::s3())),
                                 regular_rep(Quandle::conjugation(GroupTable::s3())),
                                 regular_rep(Quandle::alexander(FieldTable::of_order(9), FieldTable::of_order(9).generator()))};
    for (const auto& rep : reps) {
      CAPTURE(rep.quandle.label());
      check_decomposition_properties(rep, decompose(rep));
    }
  }

  TEST_CASE("decompose: a non-permutation representation") {
    // constant rep by a finite-order unitary: splits into its eigenlines
    const Mat u = rows({{0, 1}, {1, 0}});
    const QuandleRep rep = constant_rep(Quandle::dihedral(3), u);
    const Decomposition d = decompose(rep);
    CHECK(d.dims() == std::vector<int>{1, 1});
    check_decomposition_properties(rep, d);

    const QuandleRep infinite = constant_rep(Quandle::trivial(1), rows({{2, 0}, {0, 3}}));
    CHECK(code_of([&] { decompose(infinite); }) == ErrorCode::GroupNotFinite);
  }

  TEST_CASE("closed form examples") {
    auto texts = [](const std::vector<IrrepLabel>& ls) {
      std::vector<std::string> out;
      for (const auto& l : ls) out.push_back(l.to_string());
      return out;
    };
    CHECK(texts(dihedral_closed_form(11).label_multiset()) ==
          texts({IrrepLabel::c(1, 1), IrrepLabel::w(11, 2), IrrepLabel::w(11, 4), IrrepLabel::w(11, 6),
                 IrrepLabel::w(11, 8), IrrepLabel::w(11, 10)}));
    CHECK(dihedral_closed_form(6).label_multiset() ==
          std::vector<IrrepLabel>{IrrepLabel::c(1, 1), IrrepLabel::c(1, 1), IrrepLabel::w(3, 1), IrrepLabel::w(3, 1)});
    std::vector<IrrepLabel> eight{IrrepLabel::c(1, 1), IrrepLabel::c(1, 1), IrrepLabel::c(1, -1), IrrepLabel::c(-1, 1),
                                  IrrepLabel::w(4, 1), IrrepLabel::w(4, 1)};
    std::sort(eight.begin(), eight.end());
    CHECK(dihedral_closed_form(8).label_multiset() == eight);
    CHECK(code_of([] { dihedral_slots(2); }) == ErrorCode::InvalidParams);
  }

  TEST_CASE("multiplicity law and two-algorithm agreement for 3 <= n <= 24") {
    for (int n = 3; n <= 24; ++n) {
      CAPTURE(n);
      std::vector<IrrepLabel> expected;
      if (n % 4 == 0) {
        const int k = n / 4;
        expected = {IrrepLabel::c(1, 1), IrrepLabel::c(1, 1), IrrepLabel::c(1, -1), IrrepLabel::c(-1, 1)};
        for (int s = 1; s <= k - 1; ++s) {
          expected.push_back(IrrepLabel::w(2 * k, s));
          expected.push_back(IrrepLabel::w(2 * k, s));
        }
      } else if (n % 4 == 2) {
        const int k = (n - 2) / 4;
        expected = {IrrepLabel::c(1, 1), IrrepLabel::c(1, 1)};
        for (int s = 1; s <= k; ++s) {
          expected.push_back(IrrepLabel::w(2 * k + 1, s));
          expected.push_back(IrrepLabel::w(2 * k + 1, s));
        }
      } else {
        expected = {IrrepLabel::c(1, 1)};
        for (int s = 1; s <= (n - 1) / 2; ++s) expected.push_back(IrrepLabel::w(n, 2 * s));
      }
      std::sort(expected.begin(), expected.end());
      CHECK(expected_dihedral_labels(n) == expected);
      CHECK(dihedral_closed_form(n).label_multiset() == expected);
      CHECK(decompose(regular_rep(Quandle::dihedral(n))).label_multiset() == expected);
    }
  }

  TEST_CASE("label dictionary on the closed-form bases") {
    // matrices act on the right of row vectors, so the displayed pattern is the transpose
    for (int n : {8, 10, 12, 7, 9, 11}) {
      const QuandleRep rep = regular_rep(Quandle::dihedral(n));
      const int r = dihedral_root_order(n);
      for (const auto& slot : dihedral_slots(n)) {
        if (slot.label.dim != 2) continue;
        CAPTURE(n);
        CAPTURE(slot.name);
        Mat basis(n, 2);
        basis << slot.u, slot.v;
        const auto qr = basis.colPivHouseholderQr();
        const Mat first = qr.solve(rep(slot.first) * basis).transpose();
        const Mat second = qr.solve(rep(slot.second) * basis).transpose();
        const int e = n % 2 == 0 ? slot.s : 2 * slot.s;
        CHECK((first - rows({{0, 1}, {1, 0}})).norm() < 1e-9);
        CHECK((second - rows({{0, root_of_unity(r, e)}, {root_of_unity(r, -e), 0}})).norm() < 1e-9);
      }
    }
  }

  TEST_CASE("matrix forms in the difference bases") {
    const MatrixForms even = matrix_forms(12, DeltaBasis::Even);
    CHECK(even.first_translation == 1);
    CHECK(even.second_translation == 2);
    CHECK(even.deviation < 1e-12);
    Eigen::VectorXcd a(5);
    a << 1.0, 2.0, 3.0, 4.0, 5.0;
    Eigen::VectorXcd r1(5);
    r1 << -5.0, -4.0, -3.0, -2.0, -1.0;
    Eigen::VectorXcd r2(5);
    r2 << 1.0, 1.0 - 5.0, 1.0 - 4.0, 1.0 - 3.0, 1.0 - 2.0;
    CHECK((even.first * a - r1).norm() < 1e-12);
    CHECK((even.second * a - r2).norm() < 1e-12);
    CHECK((even.display_first - anti_diagonal_display(5)).norm() == 0.0);
    CHECK((even.display_second - column_of_ones_display(5)).norm() == 0.0);

    for (int n : {4, 6, 8, 10, 14, 20}) {
      CHECK(matrix_forms(n, DeltaBasis::Even).deviation < 1e-12);
      CHECK(matrix_forms(n, DeltaBasis::Odd).deviation < 1e-12);
    }
    for (int n : {3, 5, 7, 9, 13}) CHECK(matrix_forms(n, DeltaBasis::Full).deviation < 1e-12);
    CHECK(code_of([] { matrix_forms(7, DeltaBasis::Even); }) == ErrorCode::InvalidParams);
  }

  TEST_CASE("u_s vectors are independent for n <= 40") {
    for (int n = 3; n <= 40; ++n) {
      const int r = dihedral_root_order(n);
      if (r < 2) continue;
      const Mat m = root_difference_matrix(r);
      CHECK_MESSAGE(numerical_rank(m) == r - 1, "n = " << n);
    }
  }

  TEST_CASE("irreducibility certificates") {
    const QuandleRep z6 = regular_rep(Quandle::dihedral(6));
    const auto [ones, rest] = augmentation_split(z6);
    CHECK(is_irreducible(z6, ones));
    CHECK_FALSE(is_irreducible(z6, rest));
    CHECK(character_norm(z6, ones) == doctest::Approx(1.0));
    CHECK(character_norm(z6, rest) > 1.5);

    const QuandleRep z10 = regular_rep(Quandle::dihedral(10));
    const Decomposition closed = dihedral_closed_form(10);
    for (const auto& p : closed.parts) {
      if (p.name == "W_{1,0}") CHECK(is_irreducible(z10, p.space));
    }
    CHECK(code_of([&] { is_irreducible(z6, Subspace::span(difference_vector(6, 0, 1))); }) == ErrorCode::InvalidParams);
  }

  TEST_CASE("invariant complements") {
    const QuandleRep z6 = regular_rep(Quandle::dihedral(6));
    const auto [ones, rest] = augmentation_split(z6);
    const auto comp = invariant_complement_exists(z6, ones);
    REQUIRE(comp.has_value());
    CHECK(subspace_distance(*comp, rest) < 1e-9);

    const QuandleRep diag = constant_rep(Quandle::trivial(1), rows({{2, 0}, {0, 3}}));
    const Subspace e1{Mat::Identity(2, 1)};
    const auto c2 = invariant_complement_exists(diag, e1);
    REQUIRE(c2.has_value());
    Mat e2 = Mat::Zero(2, 1);
    e2(1, 0) = 1.0;
    CHECK(subspace_distance(*c2, Subspace{e2}) < 1e-9);

    const QuandleRep jordan = constant_rep(Quandle::trivial(1), rows({{1, 1}, {0, 1}}));
    CHECK_FALSE(invariant_complement_exists(jordan, e1).has_value());
  }

  TEST_CASE("every returned complement is invariant and spans with W") {
    for (int n : {4, 6, 9}) {
      const QuandleRep rep = regular_rep(Quandle::dihedral(n));
      for (const auto& p : decompose(rep).parts) {
        const auto c = invariant_complement_exists(rep, p.space);
        REQUIRE(c.has_value());
        CHECK(max_invariance_residual(rep, *c) < 1e-9);
        Mat both(n, p.space.dim() + c->dim());
        both << p.space.basis, c->basis;
        CHECK(numerical_rank(both) == n);
      }
    }
  }

  TEST_CASE("decompose is deterministic for a fixed seed") {
    const QuandleRep rep = regular_rep(Quandle::core(GroupTable::s3()));
    DecomposeOptions o;
    o.seed = 11;
    const Decomposition a = decompose(rep, o);
    const Decomposition b = decompose(rep, o);
    REQUIRE(a.parts.size() == b.parts.size());
    for (std::size_t i = 0; i < a.parts.size(); ++i) CHECK((a.parts[i].space.basis - b.parts[i].space.basis).norm() == 0.0);
  }
}
