#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quandle_lab/linalg.hpp"
#include "quandle_lab/representation.hpp"

namespace quandle_lab {

/// s×s Jordan block with λ on the diagonal and 1 on the superdiagonal.
Mat jordan_block(cd lambda, int size);

/// J(λ_1, s_1) ⊕ ... ⊕ J(λ_r, s_r)
struct JordanSpec {
  struct Block {
    cd lambda;
    int size = 1;
  };
  std::vector<Block> blocks;

  int dim() const;
  /// Block-diagonal matrix. InvalidParams on a non-positive size.
  Mat matrix() const;
  /// "J(1,2) ⊕ J(i,2)"
  std::string to_string() const;

  static JordanSpec diagonal(const std::vector<cd>& values);
};

/// Relative clustering tolerance for eigenvalues of a d×d matrix: defective eigenvalues spread
/// like ε^{1/d}, so the fixed default widens with the dimension.
double eigen_cluster_tol(int d, double base = 1e-8);

/// Jordan structure from rank profiles of (M - λI)^j per eigenvalue cluster. Blocks are ordered by
/// eigenvalue (real, then imaginary part), sizes descending. IllConditioned on an inconsistent profile.
JordanSpec jordan_structure(const Mat& m, double rank_tol = 1e-8);

/// λ_i^k pairwise distinct across blocks.
bool kth_power_maximal(const JordanSpec& spec, int k, double tol = 1e-8);
bool kth_power_maximal(const Mat& a, int k, double tol = 1e-8);
/// Independent route: Krylov rank of A^k from a seeded random start equals d.
bool kth_power_maximal_krylov(const Mat& a, int k, std::uint64_t seed = 0, double tol = 1e-9);
/// Degree of the minimal polynomial of m, via Arnoldi from a seeded random start.
int minimal_polynomial_degree(const Mat& m, std::uint64_t seed = 0, double tol = 1e-9);

/// One indecomposable summand U_{J(λ,s)} of a constant representation.
struct JordanPart {
  cd lambda;
  int size = 1;
  Mat chain;                  // columns b_1..b_s with (M - λ) b_i = b_{i-1}, b_0 = 0
  Subspace space;             // span of the chain
  std::vector<Subspace> flag; // span{b_1..b_i}, i = 1..s, all invariant
  bool unique_line = false;   // exactly one invariant line
  bool no_complement = false; // that line has no invariant complement inside the part
};

struct ConstantDecomposition {
  QuandleRep rep;
  JordanSpec spec;
  std::vector<JordanPart> parts;
};

/// Every element of q acts by m. Parts of size > 1 carry an indecomposable-yet-reducible
/// certificate. Singular for non-invertible m, IllConditioned from jordan_structure.
ConstantDecomposition constant_rep_decompose(const Mat& m, const Quandle& q);

}  // namespace quandle_lab
