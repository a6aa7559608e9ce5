#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandle_lab/kernels.hpp"
#include "quandle_lab/linalg.hpp"
#include "quandle_lab/quandle.hpp"

namespace quandle_lab {

/// A quandle homomorphism into GL(d, C): ρ(x▷y) = ρ(y)ρ(x)ρ(y)^{-1}.
struct QuandleRep {
  Quandle quandle;
  int dim = 0;
  std::vector<Mat> matrices;  // indexed by element

  const Mat& operator()(int x) const { return matrices[static_cast<std::size_t>(x)]; }
};

struct RepViolation {
  int x = -1;
  int y = -1;
  double residual = 0.0;  // ‖ρ(x▷y) - ρ(y)ρ(x)ρ(y)^{-1}‖_F
};

struct RepCheckReport {
  std::vector<int> singular;             // elements with non-invertible images
  std::vector<RepViolation> violations;  // capped list, worst first
  double max_residual = 0.0;

  bool ok() const { return singular.empty() && violations.empty(); }
};

/// Full residual scan. InvalidParams on a wrong matrix count or inconsistent shapes.
RepCheckReport inspect_rep(const Quandle& q, const std::vector<Mat>& matrices, double tol = 1e-9,
                           std::size_t max_violations = 32);

/// Validated representation; Singular or NotHomomorphism when inspect_rep fails.
QuandleRep check_rep(const Quandle& q, std::vector<Mat> matrices, double tol = 1e-9);

/// Permutation representation with ρ(t) e_x = e_{x▷t}.
QuandleRep regular_rep(const Quandle& q);

/// Every element acts by the same matrix m; valid for any quandle.
QuandleRep constant_rep(const Quandle& q, const Mat& m);

/// (span{1}, {Σ a_x e_x : Σ a_x = 0}). InvalidParams unless every ρ(x) is a permutation matrix.
std::pair<Subspace, Subspace> augmentation_split(const QuandleRep& rep);

/// Name of an irreducible: C(λ, μ) and W(ω_r^s) for dihedral quandles, opaque otherwise.
struct IrrepLabel {
  enum class Kind : unsigned char { C, W, Opaque };
  Kind kind = Kind::Opaque;
  int lambda = 0;  // C: ±1
  int mu = 0;
  int r = 0;  // W: root order and exponent
  int s = 0;
  int dim = 0;

  static IrrepLabel c(int lambda, int mu) { return {Kind::C, lambda, mu, 0, 0, 1}; }
  static IrrepLabel w(int r, int s) { return {Kind::W, 0, 0, r, s, 2}; }
  static IrrepLabel opaque(int dim) { return {Kind::Opaque, 0, 0, 0, 0, dim}; }

  /// "C(1,−1)", "W(ω_5)", "W(ω_5^2)", "opaque(3)".
  std::string to_string() const;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

struct Part {
  Subspace space;
  IrrepLabel label;
  std::string name;       // "C1", "C1̂", "W_{1,0}", ... when known
  std::string generator;  // spanning vector in difference-basis notation, when known
};

struct Decomposition {
  int ambient = 0;
  std::vector<Part> parts;

  std::vector<int> dims() const;
  /// Labels sorted ascending, for multiset comparison.
  std::vector<IrrepLabel> label_multiset() const;
};

struct DecomposeOptions {
  double tol = 1e-9;          // invariance
  double cluster_tol = 1e-8;  // eigenvalue clustering, relative
  std::uint64_t seed = 0;
  std::size_t group_cap = 1'000'000;
  int retries = 5;
  Exec exec = Exec::Parallel;
};

/// The finite group generated by the image matrices. Permutation images are closed exactly.
/// GroupNotFinite past the cap.
MatrixGroup image_group(const QuandleRep& rep, std::size_t cap = 1'000'000);

/// Splits rep into irreducibles by averaging random Hermitian matrices into the commutant.
/// GroupNotFinite or ToleranceFailure. Regular representations of dihedral quandles come back
/// in closed-form order with names and generators; other parts are ordered by (dim, label).
Decomposition decompose(const QuandleRep& rep, const DecomposeOptions& options = {});

/// Commutant of the restricted image group has dimension 1. GroupNotFinite for infinite images;
/// InvalidParams when `part` is not invariant.
bool is_irreducible(const QuandleRep& rep, const Subspace& part, double tol = 1e-9,
                    std::size_t cap = 1'000'000);

/// (1/|G|) Σ_g |tr g|_part|², equal to 1 exactly for irreducible unitary parts.
double character_norm(const QuandleRep& rep, const Subspace& part, std::size_t cap = 1'000'000);

/// Invariant complement of an invariant subspace w, as the graph of a map from a fixed
/// complement into w; nullopt when the linear system for that map is inconsistent.
std::optional<Subspace> invariant_complement_exists(const QuandleRep& rep, const Subspace& w, double tol = 1e-9);

/// Largest invariance residual of `part` over all ρ(x).
double max_invariance_residual(const QuandleRep& rep, const Subspace& part);

}  // namespace quandle_lab
