#include "quandle_lab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

double threshold(const Eigen::VectorXd& sv, double tol) {
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  return tol * std::max(1.0, top);
}

}  // namespace

int numerical_rank(const Mat& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cut = threshold(sv, tol);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > cut ? 1 : 0;
  return rank;
}

Mat null_space(const Mat& a, double tol) {
  const auto cols = a.cols();
  if (a.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cut = threshold(sv, tol);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > cut ? 1 : 0;
  return svd.matrixV().rightCols(cols - rank);
}

Mat column_space(const Mat& a, double tol) {
  if (a.cols() == 0) return Mat(a.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cut = threshold(sv, tol);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > cut ? 1 : 0;
  return svd.matrixU().leftCols(rank);
}

Subspace Subspace::span(const Mat& vectors, double tol) { return Subspace{column_space(vectors, tol)}; }

Subspace Subspace::whole(int d) { return Subspace{Mat::Identity(d, d)}; }

Subspace orthogonal_complement(const Subspace& s, double tol) {
  if (s.dim() == 0) return Subspace::whole(s.ambient());
  return Subspace{null_space(s.basis.adjoint(), tol)};
}

double orthonormality_error(const Subspace& s) {
  return (s.basis.adjoint() * s.basis - Mat::Identity(s.dim(), s.dim())).norm();
}

double invariance_residual(const Mat& m, const Subspace& s) {
  if (s.dim() == 0) return 0.0;
  const Mat image = m * s.basis;
  return (image - s.basis * (s.basis.adjoint() * image)).norm();
}

Mat restrict_to(const Mat& m, const Subspace& s) { return s.basis.adjoint() * m * s.basis; }

double subspace_distance(const Subspace& a, const Subspace& b) { return (a.projector() - b.projector()).norm(); }

double max_overlap(const Subspace& a, const Subspace& b) {
  if (a.dim() == 0 || b.dim() == 0) return 0.0;
  return (a.basis.adjoint() * b.basis).cwiseAbs().maxCoeff();
}

Mat fix_phases(Mat basis) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    const double top = basis.col(c).cwiseAbs().maxCoeff();
    if (top == 0.0) continue;
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      const cd v = basis(r, c);
      if (std::abs(v) >= top * (1.0 - 1e-8)) {
        basis.col(c) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return basis;
}

Mat random_complex(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = cd(re, im);
    }
  }
  return m;
}

Mat random_hermitian(int d, std::mt19937_64& rng) {
  const Mat g = random_complex(d, d, rng);
  return (g + g.adjoint()) / 2.0;
}

std::vector<EigenCluster> cluster_values(const std::vector<cd>& values, double rel_tol) {
  const int n = static_cast<int>(values.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(values[i]), std::abs(values[j])});
      if (std::abs(values[i] - values[j]) <= rel_tol * scale) parent[find(j)] = find(i);
    }
  }
  std::vector<EigenCluster> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.push_back({});
    }
    out[slot[root]].members.push_back(i);
  }
  for (auto& c : out) {
    cd sum = 0.0;
    for (int m : c.members) sum += values[m];
    c.center = sum / static_cast<double>(c.members.size());
  }
  std::sort(out.begin(), out.end(), [](const EigenCluster& a, const EigenCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<long long>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (long long v : key) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

std::vector<long long> grid_key(const Mat& m, double grid) {
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(m.size()) * 2);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      key.push_back(std::llround(m(i, j).real() / grid));
      key.push_back(std::llround(m(i, j).imag() / grid));
    }
  }
  return key;
}

}  // namespace

MatrixGroup generate_matrix_group(const std::vector<Mat>& generators, std::size_t cap, double grid) {
  if (generators.empty()) throw Error(ErrorCode::InvalidParams, "no generators");
  const auto d = generators.front().rows();
  MatrixGroup group;
  std::unordered_map<std::vector<long long>, std::size_t, KeyHash> index;
  std::vector<Mat> gens;
  for (const auto& g : generators) {
    const auto key = grid_key(g, grid);
    bool seen = false;
    for (const auto& h : gens) seen = seen || grid_key(h, grid) == key;
    if (!seen) gens.push_back(g);
  }

  const Mat id = Mat::Identity(d, d);
  index.emplace(grid_key(id, grid), 0);
  group.elements.push_back(id);
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (const auto& g : gens) {
      Mat next = g * group.elements[head];
      if (!next.allFinite() || next.norm() > 1e8) {
        throw Error(ErrorCode::ClosureBudgetExceeded, "matrix group is unbounded");
      }
      auto key = grid_key(next, grid);
      if (index.contains(key)) continue;
      if (group.elements.size() >= cap) {
        throw Error(ErrorCode::ClosureBudgetExceeded, "matrix group exceeds " + std::to_string(cap) + " elements");
      }
      index.emplace(std::move(key), group.elements.size());
      group.elements.push_back(std::move(next));
    }
  }

  group.inverses.reserve(group.elements.size());
  for (const auto& g : group.elements) {
    const Mat inv = g.partialPivLu().inverse();
    const auto it = index.find(grid_key(inv, grid));
    group.inverses.push_back(it != index.end() ? group.elements[it->second] : inv);
  }
  return group;
}

bool is_unitary(const Mat& m, double tol) {
  return (m.adjoint() * m - Mat::Identity(m.cols(), m.cols())).norm() <= tol;
}

bool is_permutation_matrix(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    int ones = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const cd v = m(i, j);
      if (v == cd(1.0, 0.0)) {
        ++ones;
      } else if (v != cd(0.0, 0.0)) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m.row(i).cwiseAbs().sum() != 1.0) return false;
  }
  return true;
}

Mat commutant_operator(const std::vector<Mat>& ms) {
  if (ms.empty()) return Mat(0, 0);
  const auto k = ms.front().rows();
  const Mat id = Mat::Identity(k, k);
  Mat op(static_cast<Eigen::Index>(ms.size()) * k * k, k * k);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    // vec(M X - X M) = (I ⊗ M - M^T ⊗ I) vec(X)
    Mat block(k * k, k * k);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) {
        block.block(a * k, b * k, k, k) = id(a, b) * ms[i] - ms[i](b, a) * id;
      }
    }
    op.middleRows(static_cast<Eigen::Index>(i) * k * k, k * k) = block;
  }
  return op;
}

int commutant_dimension(const std::vector<Mat>& ms, double tol) {
  if (ms.empty()) throw Error(ErrorCode::InvalidParams, "no matrices");
  const auto k = ms.front().rows();
  // Gram matrix Σ K_i^H K_i keeps the eigenproblem at k² × k² however many matrices there are
  Mat gram = Mat::Zero(k * k, k * k);
  for (const auto& m : ms) {
    const Mat op = commutant_operator({m});
    gram.noalias() += op.adjoint() * op;
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = eig.eigenvalues();
  const double top = std::max(1.0, ev.maxCoeff());
  const double cut = tol * tol * top;
  int dim = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) dim += ev(i) <= cut ? 1 : 0;
  return dim;
}

}  // namespace quandle_lab
