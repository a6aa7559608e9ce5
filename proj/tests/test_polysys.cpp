#include <doctest.h>

#include <random>

#include "quandle_lab/error.hpp"
#include "quandle_lab/polysys.hpp"

using namespace quandle_lab;

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

RationalPoly poly(std::vector<mpq_class> c) { return RationalPoly(std::move(c)); }

RationalPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<mpq_class> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(static_cast<long>(rng() % 11) - 5);
  if (c.back() == 0) c.back() = 1;
  return poly(c);
}

}  // namespace

TEST_SUITE("polysys") {
  TEST_CASE("polynomial arithmetic and printing") {
    const RationalPoly a = poly({-1, 0, 0, 2});
    CHECK(a.to_string() == "2*x^3 - 1");
    CHECK(a.degree() == 3);
    CHECK(poly({mpq_class(-1, 2), 1}).to_string() == "x - 1/2");
    CHECK(poly({0, 0}).is_zero());
    CHECK(poly({0, 0}).degree() == -1);
    CHECK((a - a).is_zero());
    CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
    CHECK(poly({2, 4}).monic() == poly({mpq_class(1, 2), 1}));
    CHECK(poly({mpq_class(-1, 2), mpq_class(-3, 4)}).primitive() == poly({2, 3}));
  }

  TEST_CASE("division") {
    const auto [quo, rem] = divmod(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(quo == poly({1, 1}));
    CHECK(rem.is_zero());
    const auto [q2, r2] = divmod(poly({1, 0, 0, 1}), poly({1, 2}));
    CHECK(q2 * poly({1, 2}) + r2 == poly({1, 0, 0, 1}));
    CHECK(r2.degree() < 1);
    CHECK(code_of([] { divmod(poly({1}), RationalPoly()); }) == ErrorCode::DivisionByZero);
    // prem(x^2 + 1, 2x + 1) = 4 * (x^2 + 1 mod 2x + 1) = 4 * 5/4
    CHECK(pseudo_remainder(poly({1, 0, 1}), poly({1, 2})) == poly({5}));
  }

  TEST_CASE("subresultant gcd agrees with Euclid") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      const RationalPoly common = random_poly(rng, static_cast<int>(rng() % 3));
      const RationalPoly a = random_poly(rng, static_cast<int>(rng() % 5)) * common;
      const RationalPoly b = random_poly(rng, static_cast<int>(rng() % 5)) * common;
      const RationalPoly g = gcd_subresultant(a, b);
      CAPTURE(a.to_string());
      CAPTURE(b.to_string());
      CHECK(g == gcd_euclid(a, b));
      if (!g.is_zero()) {
        CHECK(divmod(a, g).second.is_zero());
        CHECK(divmod(b, g).second.is_zero());
        CHECK(g.degree() >= common.degree());
      }
    }
    CHECK(gcd_subresultant(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    CHECK(gcd_subresultant(poly({1, 1}), poly({-1, 1})) == poly({1}));
  }

  TEST_CASE("log involution") {
    const FieldTable gf5 = FieldTable::of_order(5);
    const LogInvolution i5 = build_log_involution(gf5, gf5.from_int(2));
    CHECK(std::vector<int>(i5.phi.begin() + 1, i5.phi.end()) == std::vector<int>{2, 1, 3});
    CHECK(i5.fixed_point() == 3);
    CHECK(i5.expected_fixed_point() == 3);

    const FieldTable gf7 = FieldTable::of_order(7);
    const LogInvolution i7 = build_log_involution(gf7, gf7.from_int(3));
    CHECK(i7.fixed_point() == 4);
    CHECK(i7.expected_fixed_point() == 4);

    const FieldTable gf4 = FieldTable::of_order(4);
    const LogInvolution i4 = build_log_involution(gf4, gf4.generator());
    CHECK(i4.fixed_points.empty());
    CHECK_FALSE(i4.expected_fixed_point().has_value());
    CHECK(std::vector<int>(i4.phi.begin() + 1, i4.phi.end()) == std::vector<int>{2, 1});

    const FieldTable gf3 = FieldTable::of_order(3);
    CHECK(code_of([&] { build_log_involution(gf3, gf3.from_int(2)); }) == ErrorCode::InvalidParams);
    CHECK(code_of([&] { build_log_involution(gf5, gf5.from_int(4)); }) == ErrorCode::NotPrimitive);
  }

  TEST_CASE("involution laws for q <= 128") {
    for (int q = 4; q <= 128; ++q) {
      if (!prime_power(q)) continue;
      const FieldTable f = FieldTable::of_order(q);
      for (FieldElem a : f.primitive_elements()) {
        const LogInvolution inv = build_log_involution(f, a);
        for (int k = 1; k <= q - 2; ++k) CHECK(inv.phi[static_cast<std::size_t>(inv.phi[static_cast<std::size_t>(k)])] == k);
        if (f.characteristic() == 2) {
          CHECK(inv.fixed_points.empty());
        } else {
          CHECK(inv.fixed_points.size() == 1);
          CHECK(inv.fixed_point() == inv.expected_fixed_point());
        }
      }
    }
  }

  TEST_CASE("system gcd examples") {
    const FieldTable gf5 = FieldTable::of_order(5);
    const SystemVerdict v5 = system_has_no_solution(build_log_involution(gf5, gf5.from_int(2)));
    CHECK(v5.no_common_solution);
    CHECK(v5.gcd == poly({1}));
    CHECK_FALSE(v5.no_fixed_point);

    const FieldTable gf7 = FieldTable::of_order(7);
    for (FieldElem a : gf7.primitive_elements()) {
      const SystemVerdict v = system_has_no_solution(build_log_involution(gf7, a));
      CHECK(v.no_common_solution);
      CHECK(v.gcd.degree() == 0);
    }

    // characteristic 2 with q = 4: both equations are x + x^2 - 1
    const FieldTable gf4 = FieldTable::of_order(4);
    const SystemVerdict v4 = system_has_no_solution(build_log_involution(gf4, gf4.generator()));
    CHECK(v4.no_fixed_point);
    CHECK_FALSE(v4.no_common_solution);
    CHECK(v4.gcd == poly({-1, 1, 1}));

    // q = 3: the single equation 2x - 1 has the root 1/2
    const FieldTable gf3 = FieldTable::of_order(3);
    const SystemVerdict v3 = common_gcd(system_polynomials(gf3, gf3.from_int(2)));
    CHECK_FALSE(v3.no_common_solution);
    CHECK(v3.gcd == poly({mpq_class(-1, 2), 1}));
  }

  TEST_CASE("both gcd routes give the same verdicts") {
    for (int q : {5, 7, 8, 9, 11, 13, 16}) {
      const FieldTable f = FieldTable::of_order(q);
      for (FieldElem a : f.primitive_elements()) {
        const LogInvolution inv = build_log_involution(f, a);
        const SystemVerdict s = system_has_no_solution(inv, true);
        const SystemVerdict e = system_has_no_solution(inv, false);
        CHECK(s.gcd == e.gcd);
        CHECK(s.chain_degrees == e.chain_degrees);
      }
    }
  }

  TEST_CASE("sum identity for odd q <= 31") {
    for (int q = 5; q <= 31; ++q) {
      const auto pp = prime_power(q);
      if (!pp || pp->first == 2) continue;
      const FieldTable f = FieldTable::of_order(q);
      for (FieldElem a : f.primitive_elements()) CHECK_MESSAGE(sum_identity_holds(build_log_involution(f, a)), "q = " << q);
    }
    const FieldTable gf8 = FieldTable::of_order(8);
    CHECK(code_of([&] { sum_identity_holds(build_log_involution(gf8, gf8.generator())); }) == ErrorCode::InvalidParams);
  }

  TEST_CASE("appendix table rows") {
    const auto rows = verify_appendix(13, false, Exec::Serial);
    // 5: 2 generators, 7: 2, 9: 4, 11: 4, 13: 4
    CHECK(rows.size() == 16);
    for (const auto& r : rows) {
      CHECK(r.no_common_solution);
      CHECK(r.sum_identity);
      CHECK(r.fixed_point == r.expected_fixed_point);
      CHECK(r.gcd_degree == 0);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(std::pair(rows[i - 1].q, rows[i - 1].alpha_log) < std::pair(rows[i].q, rows[i].alpha_log));
    }
    const auto with2 = verify_appendix(8, true, Exec::Serial);
    bool saw4 = false;
    for (const auto& r : with2) {
      if (r.q == 4) {
        saw4 = true;
        CHECK(r.no_fixed_point);
        CHECK_FALSE(r.no_common_solution);
        CHECK(r.gcd_degree == 2);
      }
      if (r.q == 8) CHECK(r.no_common_solution);
    }
    CHECK(saw4);
  }
}
