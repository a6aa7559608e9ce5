#include <doctest.h>

#include <random>

#include "quandle_lab/cyclic_reps.hpp"
#include "quandle_lab/isomorphism.hpp"
#include "quandle_lab/kernels.hpp"
#include "quandle_lab/polysys.hpp"
#include "quandle_lab/representation.hpp"

using namespace quandle_lab;

TEST_SUITE("kernels") {
  TEST_CASE("distributivity scan: serial and parallel agree") {
    CHECK(max_threads() >= 1);
    for (int n : {5, 12, 30}) {
      const Quandle q = Quandle::dihedral(n);
      CHECK_FALSE(find_distributivity_violation(n, q.table(), Exec::Serial).has_value());
      CHECK_FALSE(find_distributivity_violation(n, q.table(), Exec::Parallel).has_value());
    }
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 3 + trial % 6;
      std::vector<int> table(static_cast<std::size_t>(n * n));
      for (int& v : table) v = static_cast<int>(rng() % static_cast<unsigned>(n));
      CHECK(find_distributivity_violation(n, table, Exec::Serial) == find_distributivity_violation(n, table, Exec::Parallel));
    }
    // one corrupted entry in a large table
    std::vector<int> t = Quandle::dihedral(40).table();
    t[37 * 40 + 21] = (t[37 * 40 + 21] + 1) % 40;
    const auto s = find_distributivity_violation(40, t, Exec::Serial);
    REQUIRE(s.has_value());
    CHECK(s == find_distributivity_violation(40, t, Exec::Parallel));
  }

  TEST_CASE("group average: bitwise agreement") {
    const MatrixGroup g = image_group(regular_rep(Quandle::dihedral(9)));
    std::mt19937_64 rng(5);
    const Mat h = random_hermitian(9, rng);
    const Mat a = group_average(g.elements, g.inverses, h, Exec::Serial);
    const Mat b = group_average(g.elements, g.inverses, h, Exec::Parallel);
    CHECK((a - b).norm() == 0.0);
    // the average commutes with the group
    for (const Mat& e : g.elements) CHECK((e * a - a * e).norm() < 1e-10);
  }

  TEST_CASE("isomorphism search: same map under both policies") {
    const FieldTable f = FieldTable::of_order(9);
    const auto prim = f.primitive_elements();
    IsoOptions serial;
    serial.exec = Exec::Serial;
    IsoOptions parallel;
    parallel.exec = Exec::Parallel;
    for (FieldElem a : prim) {
      for (FieldElem b : prim) {
        const Quandle qa = Quandle::alexander(f, a);
        const Quandle qb = Quandle::alexander(f, b);
        CHECK(find_isomorphism(qa, qb, serial) == find_isomorphism(qa, qb, parallel));
      }
    }
    CHECK(find_isomorphism(Quandle::dihedral(12), Quandle::dihedral(12), serial) ==
          find_isomorphism(Quandle::dihedral(12), Quandle::dihedral(12), parallel));
  }

  TEST_CASE("rigidity search: same report under both policies") {
    const FieldTable f = FieldTable::of_order(5);
    const Presentation p(f, f.generator());
    const JordanSpec spec = JordanSpec::diagonal({1.0, std::polar(1.0, 3.14159265358979323846 / 4)});
    RigidityOptions o;
    o.restarts = 8;
    o.seed = 3;
    o.exec = Exec::Serial;
    const RigidityReport s = rigidity_check(spec, p, o);
    o.exec = Exec::Parallel;
    const RigidityReport r = rigidity_check(spec, p, o);
    CHECK(s.converged_to_j == r.converged_to_j);
    CHECK(s.best_residual_away == r.best_residual_away);
    CHECK(s.passed() == r.passed());
  }

  TEST_CASE("appendix sweep: same rows under both policies") {
    const auto s = verify_appendix(50, true, Exec::Serial);
    const auto p = verify_appendix(50, true, Exec::Parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].q == p[i].q);
      CHECK(s[i].alpha_log == p[i].alpha_log);
      CHECK(s[i].gcd_degree == p[i].gcd_degree);
      CHECK(s[i].fixed_point == p[i].fixed_point);
      CHECK(s[i].no_common_solution == p[i].no_common_solution);
      CHECK(s[i].sum_identity == p[i].sum_identity);
    }
  }

  TEST_CASE("decomposition: same subspaces under both policies") {
    for (const Quandle& q : {Quandle::dihedral(12), Quandle::core(GroupTable::s3())}) {
      const QuandleRep rep = regular_rep(q);
      DecomposeOptions o;
      o.exec = Exec::Serial;
      const Decomposition a = decompose(rep, o);
      o.exec = Exec::Parallel;
      const Decomposition b = decompose(rep, o);
      REQUIRE(a.parts.size() == b.parts.size());
      for (std::size_t i = 0; i < a.parts.size(); ++i) CHECK((a.parts[i].space.basis - b.parts[i].space.basis).norm() == 0.0);
    }
  }
}
