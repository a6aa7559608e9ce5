#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace quandle_lab {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Relative singular-value threshold: values below tol * max(1, σ_max) count as zero.
int numerical_rank(const Mat& a, double tol = 1e-9);
/// Orthonormal basis of ker(a), one column per null direction.
Mat null_space(const Mat& a, double tol = 1e-9);
/// Orthonormal basis of the column space of a.
Mat column_space(const Mat& a, double tol = 1e-9);

/// Orthonormal-column description of a subspace of C^d.
struct Subspace {
  Mat basis;  // d × k

  int ambient() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }
  Mat projector() const { return basis * basis.adjoint(); }

  /// Span of the given columns, orthonormalized.
  static Subspace span(const Mat& vectors, double tol = 1e-9);
  static Subspace whole(int d);
};

Subspace orthogonal_complement(const Subspace& s, double tol = 1e-9);
/// ‖B^H B - I‖_F
double orthonormality_error(const Subspace& s);
/// ‖(I - P) m B‖_F, zero when m maps the subspace into itself.
double invariance_residual(const Mat& m, const Subspace& s);
/// B^H m B for an invariant subspace with orthonormal basis B.
Mat restrict_to(const Mat& m, const Subspace& s);
/// ‖P_a - P_b‖_F
double subspace_distance(const Subspace& a, const Subspace& b);
/// Largest |<a_i, b_j>| over basis vectors.
double max_overlap(const Subspace& a, const Subspace& b);

/// Rotates each column so its first entry of near-maximal modulus is real positive.
Mat fix_phases(Mat basis);

Mat random_hermitian(int d, std::mt19937_64& rng);
Mat random_complex(int rows, int cols, std::mt19937_64& rng);

/// Eigenvalues grouped within a relative tolerance, each with its member indices.
struct EigenCluster {
  cd center;
  std::vector<int> members;
};
std::vector<EigenCluster> cluster_values(const std::vector<cd>& values, double rel_tol);

/// Finite matrix group generated by invertible matrices, deduplicated on a rounded grid.
struct MatrixGroup {
  std::vector<Mat> elements;  // identity first
  std::vector<Mat> inverses;
  std::size_t order() const { return elements.size(); }
};

/// ClosureBudgetExceeded once more than `cap` elements appear or an element grows without bound.
MatrixGroup generate_matrix_group(const std::vector<Mat>& generators, std::size_t cap = 1'000'000,
                                  double grid = 1e-7);

bool is_unitary(const Mat& m, double tol = 1e-10);
bool is_permutation_matrix(const Mat& m);

/// Stacked Sylvester operator of {m_i}: vec(X) ↦ vec(m_i X - X m_i).
Mat commutant_operator(const std::vector<Mat>& ms);
/// Dimension of the algebra of matrices commuting with every m_i.
int commutant_dimension(const std::vector<Mat>& ms, double tol = 1e-6);

}  // namespace quandle_lab
