#include "quandle_lab/maschke.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

MaschkeReport analyze(QuandleRep rep, const Mat& b) {
  MaschkeReport report(std::move(rep));
  const JordanSpec spec = jordan_structure(b);
  for (const auto& block : spec.blocks) {
    auto it = std::find_if(report.multiplicities.begin(), report.multiplicities.end(),
                           [&](const EigenMultiplicity& e) { return e.lambda == block.lambda; });
    if (it == report.multiplicities.end()) {
      report.multiplicities.push_back({block.lambda, 0, 0});
      it = report.multiplicities.end() - 1;
    }
    it->geometric += 1;
    it->algebraic += block.size;
  }
  report.criterion_lhs = 1;
  for (const auto& e : report.multiplicities) {
    report.criterion_lhs += e.geometric;
    report.criterion_rhs += e.algebraic;
  }
  report.criterion_holds = report.criterion_lhs == report.criterion_rhs;

  for (const auto& s : joint_eigenspaces(report.rep)) report.socle_dim += s.dim();
  report.completely_reducible = report.socle_dim == report.rep.dim;

  const Subspace line{Mat::Identity(report.rep.dim, 1)};
  report.line_invariant = max_invariance_residual(report.rep, line) <= 1e-9;
  if (report.line_invariant) report.line_has_complement = invariant_complement_exists(report.rep, line).has_value();
  return report;
}

}  // namespace

QuandleRep orbit_constant_rep(const Quandle& q, const std::vector<Mat>& per_orbit) {
  const auto orbit_list = orbits(q);
  if (orbit_list.size() != per_orbit.size()) {
    throw Error(ErrorCode::InvalidParams, "need one matrix per orbit (" + std::to_string(orbit_list.size()) + ")");
  }
  std::vector<Mat> matrices(static_cast<std::size_t>(q.order()));
  for (std::size_t o = 0; o < orbit_list.size(); ++o) {
    for (int x : orbit_list[o]) matrices[x] = per_orbit[o];
  }
  return check_rep(q, std::move(matrices));
}

std::vector<Subspace> joint_eigenspaces(const QuandleRep& rep, double tol) {
  std::vector<Mat> images;
  for (const auto& m : rep.matrices) {
    bool seen = false;
    for (const auto& o : images) seen = seen || (o - m).norm() == 0.0;
    if (!seen) images.push_back(m);
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const Mat& a = images[i];
      const Mat& b = images[j];
      if ((a * b - b * a).norm() > tol * std::max(1.0, a.norm() * b.norm())) {
        throw Error(ErrorCode::InvalidParams, "socle search needs commuting images");
      }
    }
  }

  std::vector<Mat> spaces{Mat::Identity(rep.dim, rep.dim)};
  for (const auto& m : images) {
    std::vector<Mat> next;
    for (const auto& basis : spaces) {
      const Mat local = basis.adjoint() * m * basis;
      const int k = static_cast<int>(local.rows());
      Eigen::ComplexEigenSolver<Mat> eig(local, false);
      std::vector<cd> values(eig.eigenvalues().data(), eig.eigenvalues().data() + k);
      for (const auto& c : cluster_values(values, eigen_cluster_tol(k))) {
        const Mat kernel = null_space(local - c.center * Mat::Identity(k, k), tol);
        if (kernel.cols() > 0) next.push_back(basis * kernel);
      }
    }
    spaces = std::move(next);
  }
  std::vector<Subspace> out;
  for (auto& s : spaces) out.push_back(Subspace{fix_phases(s)});
  return out;
}

MaschkeReport build_maschke_counterexample(int n, const Mat& b) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "need n >= 2");
  if (b.rows() != b.cols()) throw Error(ErrorCode::InvalidParams, "matrix must be square");
  const Quandle q = Quandle::dihedral(2 * n);
  const Mat id = Mat::Identity(b.rows(), b.cols());
  std::vector<Mat> matrices;
  for (int x = 0; x < 2 * n; ++x) matrices.push_back(x % 2 == 0 ? id : b);
  return analyze(check_rep(q, std::move(matrices)), b);
}

MaschkeReport build_trivial_counterexample(const Mat& b) {
  if (b.rows() != b.cols()) throw Error(ErrorCode::InvalidParams, "matrix must be square");
  return analyze(check_rep(Quandle::trivial(1), {b}), b);
}

S3HomReport quandle_hom_not_group_hom_demo(int image) {
  const GroupTable g = GroupTable::s3();
  if (image < 0 || image >= g.order) throw Error(ErrorCode::InvalidParams, "image must be an element of S3");
  if (image == g.identity()) throw Error(ErrorCode::InvalidParams, "image must differ from the identity");
  S3HomReport report;
  report.image = image;
  const int r = 1;
  const int r2 = 2;
  for (int x = 0; x < g.order; ++x) report.map.push_back(x == r || x == r2 ? image : g.identity());
  const auto& f = report.map;
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y) {
      ++report.pairs_checked;
      const int conj = g(g(y, x), g.inverse(y));
      if (f[conj] != g(g(f[y], f[x]), g.inverse(f[y]))) ++report.quandle_law_failures;
      if (f[g(x, y)] != g(f[x], f[y])) ++report.group_law_failures;
    }
  }
  const auto [theta, rot] = report.exhibit;
  report.exhibit_product = f[g(theta, rot)];
  report.exhibit_image_product = g(f[theta], f[rot]);
  return report;
}

}  // namespace quandle_lab
