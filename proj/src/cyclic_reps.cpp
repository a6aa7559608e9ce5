#include "quandle_lab/cyclic_reps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

Mat power(const Mat& m, int k) {
  Mat out = Mat::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

bool common_eigenvector(const Mat& a, const Mat& b, const Vec& v, double tol) {
  auto ok = [&](const Mat& m) {
    const Vec mv = m * v;
    const cd rayleigh = v.dot(mv) / v.squaredNorm();
    return (mv - rayleigh * v).norm() <= tol * std::max(1.0, m.norm()) * v.norm();
  };
  return ok(a) && ok(b);
}

bool is_scalar(const Mat& m, double tol) {
  const cd c = m.trace() / static_cast<double>(m.rows());
  return (m - c * Mat::Identity(m.rows(), m.cols())).norm() <= tol * std::max(1.0, m.norm());
}

std::string matrix_text(const Mat& m) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).real() << "+" << m(i, j).imag() << "i";
  }
  os << "]";
  return os.str();
}

struct RigidityFunctor : Eigen::DenseFunctor<double> {
  RigidityFunctor(const Mat& j, const Presentation& pres, int values)
      : Eigen::DenseFunctor<double>(static_cast<int>(2 * j.size()), values), j_(j), pres_(pres) {}

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const {
    const auto d = j_.rows();
    Mat m(d, d);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = cd(x[i], x[m.size() + i]);
    fvec = rigidity_residual(j_, m, pres_);
    return 0;
  }

  const Mat& j_;
  const Presentation& pres_;
};

}  // namespace

std::optional<Vec> shemesh_2x2(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw Error(ErrorCode::InvalidParams, "Shemesh test takes 2x2 matrices");
  }
  const Mat comm = a * b - b * a;
  const Mat kernel = null_space(comm, tol);
  if (kernel.cols() == 0) return std::nullopt;

  Vec v;
  if (kernel.cols() == 1) {
    v = kernel.col(0);
  } else {
    // commuting pair: an eigenvector of a non-scalar member works
    const Mat& pick = is_scalar(a, tol) ? b : a;
    Eigen::ComplexEigenSolver<Mat> eig(pick);
    v = eig.eigenvectors().col(0);
  }
  v = fix_phases(Mat(v)).col(0);
  if (!common_eigenvector(a, b, v, 1e-7)) {
    throw Error(ErrorCode::VerificationFailure, "kernel vector of the commutator is not a common eigenvector");
  }
  return v;
}

std::string_view to_string(CyclicVerdict verdict) noexcept {
  switch (verdict) {
    case CyclicVerdict::Invalid:
      return "invalid";
    case CyclicVerdict::Constant:
      return "constant";
    case CyclicVerdict::ScalarRootCondition:
      return "scalar-root-condition";
    case CyclicVerdict::RefutationCandidate:
      return "refutation-candidate";
  }
  return "?";
}

CyclicAnalysis analyze_2d_cyclic(const Presentation& pres, const Mat& a, const Mat& b, double tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::InvalidParams, "generator images must be square of one size");
  }
  CyclicAnalysis out;
  const Eigen::FullPivLU<Mat> lu_a(a);
  const Eigen::FullPivLU<Mat> lu_b(b);
  if (!lu_a.isInvertible() || !lu_b.isInvertible()) {
    out.violated = "invertibility";
    return out;
  }
  const int q = pres.q();
  const Mat a_inv = lu_a.inverse();
  const Mat b_inv = lu_b.inverse();
  auto check = [&](const std::string& name, const Mat& lhs, const Mat& rhs) {
    const double res = (lhs - rhs).norm() / std::max(1.0, rhs.norm());
    out.relations.push_back({name, res});
    if (res > tol && out.violated.empty()) out.violated = name;
  };
  auto conj = [](const Mat& g, const Mat& g_inv, int k, const Mat& x) -> Mat { return power(g, k) * x * power(g_inv, k); };
  const std::string p = std::to_string(q - 1);

  check("A^" + p + "·B·A^-" + p + " = B", conj(a, a_inv, q - 1, b), b);
  check("B^" + p + "·A·B^-" + p + " = A", conj(b, b_inv, q - 1, a), a);
  for (int k = 1; k <= q - 2; ++k) {
    const int f = pres.phi(k);
    const std::string ks = std::to_string(k);
    const std::string fs = std::to_string(f);
    check("B^" + ks + "·A·B^-" + ks + " = A^" + fs + "·B·A^-" + fs, conj(b, b_inv, k, a), conj(a, a_inv, f, b));
    check("A^" + ks + "·B·A^-" + ks + " = B^" + fs + "·A·B^-" + fs, conj(a, a_inv, k, b), conj(b, b_inv, f, a));
  }
  if (!out.violated.empty()) return out;

  out.a_power_scalar = is_scalar(power(a, q - 1), tol);
  out.b_power_scalar = is_scalar(power(b, q - 1), tol);
  if ((a - b).norm() <= tol * std::max(1.0, a.norm())) {
    out.verdict = CyclicVerdict::Constant;
  } else if (out.a_power_scalar && out.b_power_scalar) {
    out.verdict = CyclicVerdict::ScalarRootCondition;
  } else {
    out.verdict = CyclicVerdict::RefutationCandidate;
    out.dump = "A = " + matrix_text(a) + "\nB = " + matrix_text(b);
  }
  return out;
}

Eigen::VectorXd rigidity_residual(const Mat& j, const Mat& m, const Presentation& pres) {
  const int q = pres.q();
  const auto d = j.rows();
  const auto block = 2 * d * d;
  Eigen::VectorXd out(block * q);
  auto put = [&](int slot, const Mat& r) {
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      out[slot * block + i] = r.data()[i].real();
      out[slot * block + r.size() + i] = r.data()[i].imag();
    }
  };
  const Eigen::PartialPivLU<Mat> lu_m(m);
  const double det = std::abs(lu_m.determinant());
  if (!std::isfinite(det) || det < 1e-300) {
    out.setConstant(1e6);
    return out;
  }
  const Mat m_inv = lu_m.inverse();
  const Mat j_inv = j.inverse();
  const Mat jp = power(j, q - 1);
  const double jn = std::max(j.norm(), 1e-300);
  const double w1 = 1.0 / (jn * std::max(jp.norm(), 1e-300));
  const Mat mp = power(m, q - 1);
  put(0, (j * mp - mp * j) * w1);
  put(1, (m * jp - jp * m) * w1);
  for (int k = 1; k <= q - 2; ++k) {
    const int f = pres.phi(k);
    const Mat lhs = power(m, k) * j * power(m_inv, k);
    const Mat rhs = power(j, f) * m * power(j_inv, f);
    put(k + 1, (lhs - rhs) / jn);
  }
  if (!out.allFinite()) out.setConstant(1e6);
  return out;
}

RigidityReport rigidity_check(const JordanSpec& spec, const Presentation& pres, const RigidityOptions& options) {
  const int q = pres.q();
  if (!kth_power_maximal(spec, q - 1)) {
    throw Error(ErrorCode::PreconditionViolated, spec.to_string() + " is not power maximal at k = " + std::to_string(q - 1));
  }
  const Mat j = spec.matrix();
  const auto d = j.rows();
  const double scale = std::max(1.0, j.norm());
  RigidityReport report;
  report.restarts = options.restarts;
  report.residual_at_j = rigidity_residual(j, j, pres).norm();
  report.best_residual_away = std::numeric_limits<double>::infinity();

  struct Outcome {
    double residual = 0.0;
    double distance = 0.0;
    Mat m;
  };
  std::vector<Outcome> outcomes(options.restarts);
  auto run = [&](int r) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(r)};
    std::mt19937_64 rng(seq);
    Mat start = random_complex(static_cast<int>(d), static_cast<int>(d), rng);
    // first half start anywhere, second half near J
    if (r < options.restarts / 2) {
      start *= scale / std::sqrt(2.0 * static_cast<double>(d));
    } else {
      start = j + 0.1 * scale / std::sqrt(2.0 * static_cast<double>(d)) * start;
    }
    Eigen::VectorXd x(2 * d * d);
    for (Eigen::Index i = 0; i < start.size(); ++i) {
      x[i] = start.data()[i].real();
      x[start.size() + i] = start.data()[i].imag();
    }
    RigidityFunctor functor(j, pres, static_cast<int>(2 * d * d * q));
    Eigen::NumericalDiff<RigidityFunctor> numeric(functor);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<RigidityFunctor>> lm(numeric);
    lm.setMaxfev(options.max_evaluations);
    lm.setXtol(1e-14);
    lm.setFtol(1e-14);
    lm.minimize(x);
    Mat m(d, d);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = cd(x[i], x[m.size() + i]);
    outcomes[r] = {rigidity_residual(j, m, pres).norm(), (m - j).norm() / scale, m};
  };
  if (options.exec == Exec::Serial) {
    for (int r = 0; r < options.restarts; ++r) run(r);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < options.restarts; ++r) run(r);
  }

  for (const auto& o : outcomes) {
    if (o.distance <= options.distinct_tol) {
      if (o.residual < options.residual_tol) ++report.converged_to_j;
      continue;
    }
    report.best_residual_away = std::min(report.best_residual_away, o.residual);
    if (o.residual < options.residual_tol && !report.counterexample) report.counterexample = o.m;
  }
  return report;
}

}  // namespace quandle_lab
