#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandle_lab/jordan.hpp"
#include "quandle_lab/kernels.hpp"
#include "quandle_lab/linalg.hpp"
#include "quandle_lab/presentation.hpp"

namespace quandle_lab {

/// Common eigenvector of two 2×2 matrices, found in ker[A, B]. VerificationFailure when the kernel
/// vector fails the eigenvector check.
std::optional<Vec> shemesh_2x2(const Mat& a, const Mat& b, double tol = 1e-9);

enum class CyclicVerdict { Invalid, Constant, ScalarRootCondition, RefutationCandidate };

std::string_view to_string(CyclicVerdict verdict) noexcept;

struct RelationResidual {
  std::string relation;  // e.g. "B^2·A·B^-2 = A^3·B·A^-3"
  double residual = 0.0;
};

struct CyclicAnalysis {
  CyclicVerdict verdict = CyclicVerdict::Invalid;
  std::vector<RelationResidual> relations;  // every relation checked
  std::string violated;                     // first failing relation, Invalid only
  bool a_power_scalar = false;              // A^{q-1} is a multiple of I
  bool b_power_scalar = false;
  std::string dump;                         // matrices of a refutation candidate
};

/// Checks the images A = ρ(x), B = ρ(y) of the two generators against the defining relations
/// (both orderings), then classifies the pair. Never throws on a failed relation.
CyclicAnalysis analyze_2d_cyclic(const Presentation& pres, const Mat& a, const Mat& b, double tol = 1e-9);

/// Weighted residual vector of the rigidity relations at m, as real and imaginary parts.
Eigen::VectorXd rigidity_residual(const Mat& j, const Mat& m, const Presentation& pres);

struct RigidityOptions {
  int restarts = 200;
  std::uint64_t seed = 0;
  double residual_tol = 1e-6;
  double distinct_tol = 1e-3;  // ‖M - J‖ / max(1, ‖J‖) above this counts as a different solution
  int max_evaluations = 4000;
  Exec exec = Exec::Parallel;
};

struct RigidityReport {
  int restarts = 0;
  int converged_to_j = 0;                 // restarts ending within distinct_tol of J below residual_tol
  double best_residual_away = 0.0;        // smallest residual among ends away from J
  double residual_at_j = 0.0;
  std::optional<Mat> counterexample;      // M ≠ J below residual_tol, if one turned up
  bool passed() const { return !counterexample.has_value(); }
};

/// Falsification search for solutions M ≠ J of the rigidity relations. PreconditionViolated unless
/// J is (q-1)-th power maximal.
RigidityReport rigidity_check(const JordanSpec& spec, const Presentation& pres, const RigidityOptions& options = {});

}  // namespace quandle_lab
