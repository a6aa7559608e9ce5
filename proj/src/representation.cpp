#include "quandle_lab/representation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "quandle_lab/dihedral.hpp"
#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

bool is_invertible(const Mat& m, double tol) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  return sv.size() > 0 && sv(sv.size() - 1) > tol * std::max(1.0, sv(0));
}

/// Distinct image matrices, in element order.
std::vector<Mat> distinct_images(const QuandleRep& rep) {
  std::vector<Mat> out;
  for (const auto& m : rep.matrices) {
    bool seen = false;
    for (const auto& o : out) seen = seen || (o - m).norm() == 0.0;
    if (!seen) out.push_back(m);
  }
  return out;
}

std::optional<Permutation> as_permutation(const Mat& m) {
  if (!is_permutation_matrix(m)) return std::nullopt;
  std::vector<int> images(m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) == cd(1.0, 0.0)) images[c] = static_cast<int>(r);
    }
  }
  return Permutation(std::move(images));
}

Mat permutation_matrix(const Permutation& p) {
  Mat m = Mat::Zero(p.size(), p.size());
  for (int x = 0; x < p.size(); ++x) m(p(x), x) = 1.0;
  return m;
}

void require_invariant(const QuandleRep& rep, const Subspace& part, double tol) {
  if (part.ambient() != rep.dim) throw Error(ErrorCode::InvalidParams, "subspace lives in the wrong dimension");
  if (max_invariance_residual(rep, part) > tol) throw Error(ErrorCode::InvalidParams, "subspace is not invariant");
}

std::vector<Mat> restrict_all(const std::vector<Mat>& ms, const Mat& basis) {
  std::vector<Mat> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(basis.adjoint() * m * basis);
  return out;
}

bool projector_less(const Subspace& a, const Subspace& b) {
  const Mat pa = a.projector();
  const Mat pb = b.projector();
  for (Eigen::Index j = 0; j < pa.cols(); ++j) {
    for (Eigen::Index i = 0; i < pa.rows(); ++i) {
      const double da = pa(i, j).real() - pb(i, j).real();
      if (std::abs(da) > 1e-9) return da < 0;
      const double di = pa(i, j).imag() - pb(i, j).imag();
      if (std::abs(di) > 1e-9) return di < 0;
    }
  }
  return false;
}

/// Recursive commutant splitting inside one invariant block of a unitary group.
class Splitter {
 public:
  Splitter(const MatrixGroup& group, const std::vector<Mat>& generators, const DecomposeOptions& options)
      : group_(group), generators_(generators), options_(options), rng_(options.seed) {}

  void split(const Mat& basis, std::vector<Mat>& leaves) {
    const int k = static_cast<int>(basis.cols());
    if (k == 0) return;
    if (k == 1) {
      leaves.push_back(basis);
      return;
    }
    const std::vector<Mat> local = restrict_all(group_.elements, basis);
    std::vector<Mat> local_inv;
    local_inv.reserve(local.size());
    for (const auto& g : local) local_inv.push_back(g.adjoint());

    for (int attempt = 0; attempt <= options_.retries; ++attempt) {
      const Mat h = random_hermitian(k, rng_);
      Mat avg = group_average(local, local_inv, h, options_.exec);
      avg = (avg + avg.adjoint()) / 2.0;
      Eigen::SelfAdjointEigenSolver<Mat> eig(avg);
      std::vector<cd> values;
      for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) values.emplace_back(eig.eigenvalues()(i), 0.0);
      const auto clusters = cluster_values(values, options_.cluster_tol);
      if (clusters.size() == 1) {
        if (commutant_dimension(restrict_all(generators_, basis)) == 1) {
          leaves.push_back(basis);
          return;
        }
        continue;
      }
      for (const auto& c : clusters) {
        Mat vecs(k, static_cast<Eigen::Index>(c.members.size()));
        for (std::size_t j = 0; j < c.members.size(); ++j) vecs.col(j) = eig.eigenvectors().col(c.members[j]);
        split(basis * vecs, leaves);
      }
      return;
    }
    throw Error(ErrorCode::ToleranceFailure,
                "eigenvalues of the averaged matrix stayed clustered for a block of dimension " + std::to_string(k));
  }

 private:
  const MatrixGroup& group_;
  const std::vector<Mat>& generators_;
  const DecomposeOptions& options_;
  std::mt19937_64 rng_;
};

/// Orbit pre-split of a permutation representation: C1, the rest of the span of orbit
/// indicators, then each orbit's zero-sum space.
std::vector<Mat> orbit_blocks(const QuandleRep& rep, std::vector<bool>& trivial_block) {
  const int d = rep.dim;
  std::vector<int> parent(d);
  for (int i = 0; i < d; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& m : rep.matrices) {
    const auto p = as_permutation(m);
    for (int x = 0; x < d; ++x) parent[find(x)] = find((*p)(x));
  }
  std::map<int, std::vector<int>> by_root;
  for (int x = 0; x < d; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<int>> orbit_list;
  for (auto& [root, members] : by_root) orbit_list.push_back(members);
  std::sort(orbit_list.begin(), orbit_list.end());

  std::vector<Mat> blocks;
  Mat ones = Mat::Constant(d, 1, 1.0 / std::sqrt(static_cast<double>(d)));
  blocks.push_back(ones);
  trivial_block.push_back(true);

  Mat indicators = Mat::Zero(d, static_cast<Eigen::Index>(orbit_list.size()));
  for (std::size_t o = 0; o < orbit_list.size(); ++o) {
    for (int x : orbit_list[o]) indicators(x, static_cast<Eigen::Index>(o)) = 1.0;
  }
  // Gram-Schmidt on the indicators after 1
  Mat done = ones;
  for (Eigen::Index o = 0; o + 1 < indicators.cols(); ++o) {
    Vec v = indicators.col(o);
    v -= done * (done.adjoint() * v);
    v -= done * (done.adjoint() * v);
    const double len = v.norm();
    if (len < 1e-12) continue;
    v /= len;
    blocks.push_back(v);
    trivial_block.push_back(true);
    done.conservativeResize(Eigen::NoChange, done.cols() + 1);
    done.col(done.cols() - 1) = v;
  }
  for (const auto& orbit : orbit_list) {
    if (orbit.size() < 2) continue;
    const auto m = static_cast<Eigen::Index>(orbit.size());
    Mat local = Mat::Zero(d, m - 1);
    for (Eigen::Index i = 0; i + 1 < m; ++i) {
      local(orbit[i], i) = 1.0;
      local(orbit[i + 1], i) = -1.0;
    }
    blocks.push_back(column_space(local));
    trivial_block.push_back(false);
  }
  return blocks;
}

IrrepLabel read_label(const QuandleRep& rep, const Subspace& part) {
  if (const auto n = dihedral_order(rep.quandle)) {
    const IrrepLabel label = read_dihedral_label(*n, rep, part);
    if (label.kind != IrrepLabel::Kind::Opaque) return label;
  }
  return IrrepLabel::opaque(part.dim());
}

bool is_regular(const QuandleRep& rep) {
  if (rep.dim != rep.quandle.order()) return false;
  const QuandleRep reg = regular_rep(rep.quandle);
  for (int x = 0; x < rep.dim; ++x) {
    if (reg(x) != rep(x)) return false;
  }
  return true;
}

}  // namespace

RepCheckReport inspect_rep(const Quandle& q, const std::vector<Mat>& matrices, double tol, std::size_t max_violations) {
  const int n = q.order();
  if (static_cast<int>(matrices.size()) != n) {
    throw Error(ErrorCode::InvalidParams, "expected " + std::to_string(n) + " matrices, got " + std::to_string(matrices.size()));
  }
  const Eigen::Index d = n > 0 ? matrices.front().rows() : 0;
  for (const auto& m : matrices) {
    if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::InvalidParams, "matrices must be square of one size");
  }
  RepCheckReport report;
  std::vector<Mat> inverses(n);
  for (int x = 0; x < n; ++x) {
    if (!is_invertible(matrices[x], 1e-12)) {
      report.singular.push_back(x);
    } else {
      inverses[x] = matrices[x].partialPivLu().inverse();
    }
  }
  if (!report.singular.empty()) return report;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const double res = (matrices[q(x, y)] - matrices[y] * matrices[x] * inverses[y]).norm();
      report.max_residual = std::max(report.max_residual, res);
      if (res > tol) report.violations.push_back({x, y, res});
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const RepViolation& a, const RepViolation& b) { return a.residual > b.residual; });
  if (report.violations.size() > max_violations) report.violations.resize(max_violations);
  return report;
}

QuandleRep check_rep(const Quandle& q, std::vector<Mat> matrices, double tol) {
  const RepCheckReport report = inspect_rep(q, matrices, tol);
  if (!report.singular.empty()) {
    throw Error(ErrorCode::Singular, "image of element " + std::to_string(report.singular.front()) + " is singular");
  }
  if (!report.violations.empty()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::NotHomomorphism, "pair (" + std::to_string(v.x) + ", " + std::to_string(v.y) +
                                                ") has residual " + std::to_string(v.residual));
  }
  const int d = matrices.empty() ? 0 : static_cast<int>(matrices.front().rows());
  return QuandleRep{q, d, std::move(matrices)};
}

QuandleRep regular_rep(const Quandle& q) {
  const int n = q.order();
  QuandleRep rep{q, n, {}};
  rep.matrices.reserve(n);
  for (int t = 0; t < n; ++t) {
    Mat m = Mat::Zero(n, n);
    for (int x = 0; x < n; ++x) m(q(x, t), x) = 1.0;
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

QuandleRep constant_rep(const Quandle& q, const Mat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidParams, "matrix must be square");
  return check_rep(q, std::vector<Mat>(static_cast<std::size_t>(q.order()), m));
}

std::pair<Subspace, Subspace> augmentation_split(const QuandleRep& rep) {
  for (const auto& m : rep.matrices) {
    if (!is_permutation_matrix(m)) throw Error(ErrorCode::InvalidParams, "augmentation split needs a permutation representation");
  }
  const int d = rep.dim;
  const Mat ones = Mat::Constant(d, 1, 1.0);
  Subspace line = Subspace::span(ones);
  line.basis = fix_phases(line.basis);
  Subspace rest = orthogonal_complement(line);
  rest.basis = fix_phases(rest.basis);
  return {line, rest};
}

std::string IrrepLabel::to_string() const {
  auto sign = [](int v) { return v < 0 ? std::string("−1") : std::string("1"); };
  switch (kind) {
    case Kind::C:
      return "C(" + sign(lambda) + "," + sign(mu) + ")";
    case Kind::W:
      if (s == 1) return "W(ω_" + std::to_string(r) + ")";
      return "W(ω_" + std::to_string(r) + "^" + std::to_string(s) + ")";
    case Kind::Opaque:
      break;
  }
  return "opaque(" + std::to_string(dim) + ")";
}

std::vector<int> Decomposition::dims() const {
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(p.space.dim());
  return out;
}

std::vector<IrrepLabel> Decomposition::label_multiset() const {
  std::vector<IrrepLabel> out;
  for (const auto& p : parts) out.push_back(p.label);
  std::sort(out.begin(), out.end());
  return out;
}

MatrixGroup image_group(const QuandleRep& rep, std::size_t cap) {
  const std::vector<Mat> gens = distinct_images(rep);
  if (gens.empty()) throw Error(ErrorCode::InvalidParams, "representation has no elements");
  std::vector<Permutation> perms;
  for (const auto& m : gens) {
    auto p = as_permutation(m);
    if (!p) break;
    perms.push_back(std::move(*p));
  }
  try {
    if (perms.size() == gens.size()) {
      const PermGroup group = generate_group(perms, rep.dim, cap);
      MatrixGroup out;
      for (const auto& g : group.elements) {
        out.elements.push_back(permutation_matrix(g));
        out.inverses.push_back(out.elements.back().transpose());
      }
      return out;
    }
    return generate_matrix_group(gens, cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClosureBudgetExceeded) throw;
    throw Error(ErrorCode::GroupNotFinite, "image group has more than " + std::to_string(cap) + " elements");
  }
}

Decomposition decompose(const QuandleRep& rep, const DecomposeOptions& options) {
  const int d = rep.dim;
  MatrixGroup group = image_group(rep, options.group_cap);
  std::vector<Mat> gens = distinct_images(rep);

  bool unitary = true;
  for (const auto& g : gens) unitary = unitary && is_unitary(g, 1e-10);
  // similarity S with S g S^{-1} unitary for every g
  Mat s = Mat::Identity(d, d);
  Mat s_inv = Mat::Identity(d, d);
  if (!unitary) {
    Mat gram = Mat::Zero(d, d);
    for (const auto& g : group.elements) gram += g.adjoint() * g;
    gram /= static_cast<double>(group.order());
    s = gram.llt().matrixU();
    s_inv = s.inverse();
    for (auto& g : group.elements) g = s * g * s_inv;
    for (auto& g : group.inverses) g = s * g * s_inv;
    for (auto& g : gens) g = s * g * s_inv;
  }

  std::vector<Mat> blocks;
  std::vector<bool> trivial;
  bool permutation = true;
  for (const auto& m : rep.matrices) permutation = permutation && is_permutation_matrix(m);
  if (permutation) {
    blocks = orbit_blocks(rep, trivial);
  } else {
    blocks.push_back(Mat::Identity(d, d));
    trivial.push_back(false);
  }

  Splitter splitter(group, gens, options);
  std::vector<Mat> leaves;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (trivial[b]) {
      leaves.push_back(blocks[b]);
    } else {
      splitter.split(blocks[b], leaves);
    }
  }

  Decomposition out;
  out.ambient = d;
  for (const auto& leaf : leaves) {
    Part part;
    part.space = Subspace{fix_phases(unitary ? leaf : column_space(s_inv * leaf))};
    if (max_invariance_residual(rep, part.space) > options.tol) {
      throw Error(ErrorCode::ToleranceFailure, "split produced a part with invariance residual above tolerance");
    }
    part.label = read_label(rep, part.space);
    out.parts.push_back(std::move(part));
  }
  std::stable_sort(out.parts.begin(), out.parts.end(), [](const Part& a, const Part& b) {
    if (a.space.dim() != b.space.dim()) return a.space.dim() < b.space.dim();
    if (a.label != b.label) return a.label < b.label;
    return projector_less(a.space, b.space);
  });

  // regular representations of Z_n: align with the closed-form slots
  const auto n = dihedral_order(rep.quandle);
  if (n && is_regular(rep)) {
    const Decomposition closed = dihedral_closed_form(*n);
    std::vector<int> slot_of(out.parts.size(), -1);
    std::vector<char> taken(closed.parts.size(), 0);
    bool matched = closed.parts.size() == out.parts.size();
    for (std::size_t i = 0; matched && i < out.parts.size(); ++i) {
      for (std::size_t j = 0; j < closed.parts.size(); ++j) {
        if (!taken[j] && closed.parts[j].space.dim() == out.parts[i].space.dim() &&
            subspace_distance(closed.parts[j].space, out.parts[i].space) < 1e-6) {
          slot_of[i] = static_cast<int>(j);
          taken[j] = 1;
          break;
        }
      }
      matched = slot_of[i] >= 0;
    }
    if (matched) {
      std::vector<Part> ordered(out.parts.size());
      for (std::size_t i = 0; i < out.parts.size(); ++i) {
        Part& p = out.parts[i];
        p.name = closed.parts[slot_of[i]].name;
        p.generator = closed.parts[slot_of[i]].generator;
        ordered[slot_of[i]] = std::move(p);
      }
      out.parts = std::move(ordered);
    }
  }
  return out;
}

bool is_irreducible(const QuandleRep& rep, const Subspace& part, double tol, std::size_t cap) {
  require_invariant(rep, part, tol);
  if (part.dim() == 0) return false;
  image_group(rep, cap);  // finiteness certificate
  return commutant_dimension(restrict_all(distinct_images(rep), part.basis)) == 1;
}

double character_norm(const QuandleRep& rep, const Subspace& part, std::size_t cap) {
  const MatrixGroup group = image_group(rep, cap);
  double sum = 0.0;
  for (const auto& g : group.elements) sum += std::norm((part.basis.adjoint() * g * part.basis).trace());
  return sum / static_cast<double>(group.order());
}

std::optional<Subspace> invariant_complement_exists(const QuandleRep& rep, const Subspace& w, double tol) {
  require_invariant(rep, w, std::max(tol, 1e-9));
  const int d = rep.dim;
  const int k = w.dim();
  if (k == 0) return Subspace::whole(d);
  if (k == d) return Subspace{Mat(d, 0)};
  const Mat u0 = orthogonal_complement(w).basis;
  const int m = d - k;
  Mat q(d, d);
  q << w.basis, u0;

  const std::vector<Mat> gens = distinct_images(rep);
  const Eigen::Index block = static_cast<Eigen::Index>(k) * m;
  Mat system(block * static_cast<Eigen::Index>(gens.size()), block);
  Vec rhs(block * static_cast<Eigen::Index>(gens.size()));
  const Mat ik = Mat::Identity(k, k);
  const Mat im = Mat::Identity(m, m);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Mat a = q.adjoint() * gens[g] * q;
    const Mat aww = a.topLeftCorner(k, k);
    const Mat awu = a.topRightCorner(k, m);
    const Mat auu = a.bottomRightCorner(m, m);
    // vec(A_WW T - T A_UU) = (I_m ⊗ A_WW - A_UU^T ⊗ I_k) vec(T)
    Mat op = Mat::Zero(block, block);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        op.block(i * k, j * k, k, k) = im(i, j) * aww - auu(j, i) * ik;
      }
    }
    const auto row = static_cast<Eigen::Index>(g) * block;
    system.middleRows(row, block) = op;
    rhs.segment(row, block) = -Eigen::Map<const Vec>(awu.data(), block);
  }
  const Vec t = system.completeOrthogonalDecomposition().solve(rhs);
  const double residual = (system * t - rhs).norm();
  if (residual > tol * std::max(1.0, rhs.norm() + system.norm())) return std::nullopt;

  const Mat tmat = Eigen::Map<const Mat>(t.data(), k, m);
  Mat graph(d, m);
  graph = w.basis * tmat + u0;
  Subspace complement{fix_phases(column_space(graph))};
  if (complement.dim() != m || max_invariance_residual(rep, complement) > 1e-7) return std::nullopt;
  return complement;
}

double max_invariance_residual(const QuandleRep& rep, const Subspace& part) {
  double worst = 0.0;
  for (const auto& m : rep.matrices) worst = std::max(worst, invariance_residual(m, part));
  return worst;
}

}  // namespace quandle_lab
