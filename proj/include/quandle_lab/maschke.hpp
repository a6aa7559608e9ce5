#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandle_lab/jordan.hpp"
#include "quandle_lab/representation.hpp"

namespace quandle_lab {

/// ρ(x) = matrices[k] for x in the k-th orbit (orbits() order). Validated through check_rep.
QuandleRep orbit_constant_rep(const Quandle& q, const std::vector<Mat>& per_orbit);

/// Joint eigenspaces of a commuting family; their sum is the socle of the representation.
/// InvalidParams when the images do not commute.
std::vector<Subspace> joint_eigenspaces(const QuandleRep& rep, double tol = 1e-8);

struct EigenMultiplicity {
  cd lambda;
  int geometric = 0;
  int algebraic = 0;
};

struct MaschkeReport {
  explicit MaschkeReport(QuandleRep r) : rep(std::move(r)) {}

  QuandleRep rep;
  std::vector<EigenMultiplicity> multiplicities;  // of the non-identity image
  int criterion_lhs = 0;                          // 1 + Σ geometric
  int criterion_rhs = 0;                          // Σ algebraic
  bool criterion_holds = false;
  int socle_dim = 0;
  bool completely_reducible = false;  // socle is everything
  bool line_invariant = false;        // span{e_1} is invariant
  bool line_has_complement = false;   // only meaningful when line_invariant
};

/// Z_{2n} with the even orbit ↦ I and the odd orbit ↦ b. InvalidParams for n < 2, Singular for b.
MaschkeReport build_maschke_counterexample(int n, const Mat& b);
/// The one-element quandle with its element ↦ b.
MaschkeReport build_trivial_counterexample(const Mat& b);

struct S3HomReport {
  int image = 0;                      // element R of S3 that r and r² map to
  std::vector<int> map;               // the map S3 → S3
  int pairs_checked = 0;
  int quandle_law_failures = 0;       // pairs with q(yxy^{-1}) ≠ q(y)q(x)q(y)^{-1}
  int group_law_failures = 0;         // pairs with q(xy) ≠ q(x)q(y)
  std::pair<int, int> exhibit{3, 1};  // (θ, r)
  int exhibit_product = 0;            // q(θr)
  int exhibit_image_product = 0;      // q(θ)q(r)

  bool quandle_hom() const { return quandle_law_failures == 0; }
  bool group_hom() const { return group_law_failures == 0; }
};

/// S3 ordered 1, r, r², θ, θr, θr²; {r, r²} ↦ image, the rest ↦ 1. InvalidParams for image = 1.
S3HomReport quandle_hom_not_group_hom_demo(int image = 1);

}  // namespace quandle_lab
