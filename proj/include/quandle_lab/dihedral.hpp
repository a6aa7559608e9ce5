#pragma once

#include <string>
#include <vector>

#include "quandle_lab/linalg.hpp"
#include "quandle_lab/representation.hpp"

namespace quandle_lab {

/// e_{a mod n} - e_{b mod n}
Vec difference_vector(int n, int a, int b);

/// One summand of the explicit decomposition of the regular representation of Z_n.
struct ClosedFormSlot {
  std::string name;       // "C1", "C1̂", "W_{s,0}", "W_{s,1}", "W_{s}"
  std::string generator;  // spanning vector, e.g. "Σ_{i=1}^{4} (1−ω_5^{i}) v_{2i,2i+2}"
  IrrepLabel label;
  int orbit = -1;   // 0 even, 1 odd, -1 whole space
  int s = 0;
  int first = 1;    // translations playing the role of the two generators on this slot
  int second = 2;
  Vec u;
  Vec v;            // ρ(first) u
};

/// Slots in table order: C1, C1̂ (n even), then W_{s,0}, W_{s,1} or W_{s}. InvalidParams for n < 3.
std::vector<ClosedFormSlot> dihedral_slots(int n);

/// Closed-form decomposition of regular_rep(dihedral(n)); each span is checked for invariance and
/// expected dimension, VerificationFailure otherwise.
Decomposition dihedral_closed_form(int n);

/// Label of an irreducible part read from ρ(1) and ρ(2): scalars for C(λ, μ), and for a plane the
/// eigenvalue of ρ(1)ρ(2), reduced to the canonical exponent. Opaque when neither reading applies.
IrrepLabel read_dihedral_label(int n, const QuandleRep& rep, const Subspace& part, double tol = 1e-8);

/// Root order of the labels for Z_n: n/2 for even n, n for odd n.
int dihedral_root_order(int n);

/// Canonical exponent of ω_m^e: min(e, m-e) for even n, the even member of {e, n-e} for odd n.
int canonical_exponent(int n, int e);

/// Expected label multiset for regular_rep(dihedral(n)), straight from the dimension formulas.
std::vector<IrrepLabel> expected_dihedral_labels(int n);

enum class DeltaBasis { Even, Odd, Full };

/// Columns v_{2i,2i+2} (Even), v_{2i-1,2i+1} (Odd) for i = 1..n/2-1, or v_{i,i+1} (Full) for i = 1..n-1.
Mat delta_basis(int n, DeltaBasis which);

struct MatrixForms {
  int first_translation = 0;
  int second_translation = 0;
  Mat first;  // coordinates of ρ(t) on the span of the delta basis
  Mat second;
  Mat display_first;  // the integer patterns the coordinates are expected to equal
  Mat display_second;
  double deviation = 0.0;  // max Frobenius distance between computed and display matrices
};

/// Even: translations (1, 2) on the even difference basis. Odd: (n/2, 1) on the odd difference basis.
/// Full (n odd): (0, 1). InvalidParams on a parity mismatch or n < 3.
MatrixForms matrix_forms(int n, DeltaBasis which);

/// k×k anti-diagonal of -1.
Mat anti_diagonal_display(int k);
/// k×k: first column all 1, row i >= 1 has -1 in column k-i.
Mat column_of_ones_display(int k);
/// k×k: row i < k-1 has -1 in column k-2-i, every row has 1 in the last column.
Mat full_first_display(int k);

/// (r-1)×(r-1) matrix with entries 1 - ω_r^{s i}, rows s and columns i in [1, r-1].
Mat root_difference_matrix(int r);

}  // namespace quandle_lab
