#include "quandle_lab/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

Mat matrix_power(const Mat& m, int k) {
  Mat out = Mat::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

cd snap(cd z, double scale) {
  const double eps = 1e-12 * std::max(1.0, scale);
  double re = std::abs(z.real()) < eps ? 0.0 : z.real();
  double im = std::abs(z.imag()) < eps ? 0.0 : z.imag();
  return {re, im};
}

std::string number_text(cd z) {
  auto real_text = [](double v) {
    std::ostringstream os;
    os << v;
    return os.str();
  };
  if (z.imag() == 0.0) return real_text(z.real());
  std::string im = z.imag() == 1.0 ? "i" : (z.imag() == -1.0 ? "-i" : real_text(z.imag()) + "i");
  if (z.real() == 0.0) return im;
  if (im.front() != '-') im = "+" + im;
  return real_text(z.real()) + im;
}

struct Cluster {
  cd lambda;
  int algebraic = 0;
  std::vector<int> nullities;  // nullity of (M - λ)^j, j = 0..algebraic
};

std::vector<Cluster> eigen_clusters(const Mat& m, double rank_tol) {
  const int d = static_cast<int>(m.rows());
  Eigen::ComplexEigenSolver<Mat> eig(m, false);
  if (eig.info() != Eigen::Success) throw Error(ErrorCode::IllConditioned, "eigenvalue iteration failed");
  std::vector<cd> values(eig.eigenvalues().data(), eig.eigenvalues().data() + d);
  const auto groups = cluster_values(values, eigen_cluster_tol(d));

  std::vector<Cluster> out;
  const Mat id = Mat::Identity(d, d);
  for (const auto& g : groups) {
    Cluster c;
    c.lambda = snap(g.center, m.norm());
    c.algebraic = static_cast<int>(g.members.size());
    c.nullities.push_back(0);
    const Mat n = m - g.center * id;
    Mat power = id;
    for (int j = 1; j <= c.algebraic; ++j) {
      power = power * n;
      c.nullities.push_back(d - numerical_rank(power, rank_tol));
    }
    if (c.nullities.back() != c.algebraic) {
      throw Error(ErrorCode::IllConditioned, "generalized eigenspace of " + number_text(c.lambda) + " has dimension " +
                                                 std::to_string(c.nullities.back()) + ", expected " +
                                                 std::to_string(c.algebraic));
    }
    for (int j = 1; j <= c.algebraic; ++j) {
      const int step = c.nullities[j] - c.nullities[j - 1];
      const int prev = j >= 2 ? c.nullities[j - 1] - c.nullities[j - 2] : std::numeric_limits<int>::max();
      if (step < 0 || step > prev) throw Error(ErrorCode::IllConditioned, "inconsistent rank profile");
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Number of blocks of each size, index = size.
std::vector<int> block_counts(const Cluster& c) {
  std::vector<int> at_least(c.algebraic + 2, 0);
  for (int j = 1; j <= c.algebraic; ++j) at_least[j] = c.nullities[j] - c.nullities[j - 1];
  std::vector<int> exact(c.algebraic + 1, 0);
  for (int j = 1; j <= c.algebraic; ++j) exact[j] = at_least[j] - at_least[j + 1];
  return exact;
}

}  // namespace

Mat jordan_block(cd lambda, int size) {
  if (size <= 0) throw Error(ErrorCode::InvalidParams, "Jordan block size must be positive");
  Mat m = Mat::Zero(size, size);
  for (int i = 0; i < size; ++i) m(i, i) = lambda;
  for (int i = 0; i + 1 < size; ++i) m(i, i + 1) = 1.0;
  return m;
}

int JordanSpec::dim() const {
  int d = 0;
  for (const auto& b : blocks) d += b.size;
  return d;
}

Mat JordanSpec::matrix() const {
  const int d = dim();
  Mat m = Mat::Zero(d, d);
  int at = 0;
  for (const auto& b : blocks) {
    m.block(at, at, b.size, b.size) = jordan_block(b.lambda, b.size);
    at += b.size;
  }
  return m;
}

std::string JordanSpec::to_string() const {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += " ⊕ ";
    out += "J(" + number_text(b.lambda) + "," + std::to_string(b.size) + ")";
  }
  return out;
}

JordanSpec JordanSpec::diagonal(const std::vector<cd>& values) {
  JordanSpec spec;
  for (cd v : values) spec.blocks.push_back({v, 1});
  return spec;
}

double eigen_cluster_tol(int d, double base) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(base, std::min(1e-3, 8.0 * std::pow(eps, 1.0 / std::max(1, d))));
}

JordanSpec jordan_structure(const Mat& m, double rank_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) throw Error(ErrorCode::InvalidParams, "need a non-empty square matrix");
  JordanSpec spec;
  for (const auto& c : eigen_clusters(m, rank_tol)) {
    const auto counts = block_counts(c);
    for (int size = c.algebraic; size >= 1; --size) {
      for (int i = 0; i < counts[size]; ++i) spec.blocks.push_back({c.lambda, size});
    }
  }
  return spec;
}

bool kth_power_maximal(const JordanSpec& spec, int k, double tol) {
  if (k <= 0) throw Error(ErrorCode::InvalidParams, "power must be positive");
  std::vector<cd> powers;
  for (const auto& b : spec.blocks) powers.push_back(std::pow(b.lambda, k));
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t j = i + 1; j < powers.size(); ++j) {
      const double scale = std::max({1.0, std::abs(powers[i]), std::abs(powers[j])});
      if (std::abs(powers[i] - powers[j]) <= tol * scale) return false;
    }
  }
  return true;
}

bool kth_power_maximal(const Mat& a, int k, double tol) { return kth_power_maximal(jordan_structure(a), k, tol); }

int minimal_polynomial_degree(const Mat& m, std::uint64_t seed, double tol) {
  const auto d = m.rows();
  std::mt19937_64 rng(seed);
  Vec v = random_complex(static_cast<int>(d), 1, rng);
  v.normalize();
  Mat q(d, 1);
  q.col(0) = v;
  const double scale = std::max(1.0, m.norm());
  for (Eigen::Index j = 0; j < d; ++j) {
    Vec w = m * q.col(j);
    for (int pass = 0; pass < 2; ++pass) w -= q * (q.adjoint() * w);
    const double h = w.norm();
    if (h <= tol * scale) return static_cast<int>(j + 1);
    if (j + 1 == d) break;
    q.conservativeResize(Eigen::NoChange, j + 2);
    q.col(j + 1) = w / h;
  }
  return static_cast<int>(d);
}

bool kth_power_maximal_krylov(const Mat& a, int k, std::uint64_t seed, double tol) {
  if (k <= 0) throw Error(ErrorCode::InvalidParams, "power must be positive");
  return minimal_polynomial_degree(matrix_power(a, k), seed, tol) == a.rows();
}

ConstantDecomposition constant_rep_decompose(const Mat& m, const Quandle& q) {
  const double rank_tol = 1e-8;
  ConstantDecomposition out{constant_rep(q, m), jordan_structure(m, rank_tol), {}};
  const auto d = m.rows();
  const Mat id = Mat::Identity(d, d);

  for (const auto& c : eigen_clusters(m, rank_tol)) {
    const Mat n = m - c.lambda * id;
    std::vector<Mat> kernels{Mat(d, 0)};
    Mat power = id;
    for (int j = 1; j <= c.algebraic; ++j) {
      power = power * n;
      kernels.push_back(null_space(power, rank_tol));
    }
    const auto counts = block_counts(c);
    struct Chain {
      Vec top;
      int size;
    };
    std::vector<Chain> chains;
    for (int s = c.algebraic; s >= 1; --s) {
      if (counts[s] == 0) continue;
      Mat w = kernels[s - 1];
      for (const auto& ch : chains) {
        w.conservativeResize(Eigen::NoChange, w.cols() + 1);
        w.col(w.cols() - 1) = matrix_power(n, ch.size - s) * ch.top;
      }
      const Mat wo = column_space(w, rank_tol);
      const Mat rest = kernels[s] - wo * (wo.adjoint() * kernels[s]);
      const Mat tops = column_space(rest, 1e-6);
      if (tops.cols() != counts[s]) throw Error(ErrorCode::IllConditioned, "Jordan chain tops do not match the rank profile");
      for (Eigen::Index t = 0; t < tops.cols(); ++t) chains.push_back({tops.col(t), s});
    }

    for (const auto& ch : chains) {
      JordanPart part;
      part.lambda = c.lambda;
      part.size = ch.size;
      part.chain = Mat(d, ch.size);
      for (int i = 1; i <= ch.size; ++i) part.chain.col(i - 1) = matrix_power(n, ch.size - i) * ch.top;
      part.space = Subspace{column_space(part.chain, 1e-10)};
      for (int i = 1; i <= ch.size; ++i) part.flag.push_back(Subspace{column_space(part.chain.leftCols(i), 1e-10)});

      const Mat local = part.chain.completeOrthogonalDecomposition().solve(m * part.chain);
      const Mat shifted = local - c.lambda * Mat::Identity(ch.size, ch.size);
      part.unique_line = ch.size - numerical_rank(shifted, rank_tol) == 1;
      if (ch.size > 1) {
        const QuandleRep inner = constant_rep(q, local);
        const Subspace line{Mat::Identity(ch.size, 1)};
        part.no_complement = !invariant_complement_exists(inner, line, 1e-9).has_value();
      }
      out.parts.push_back(std::move(part));
    }
  }
  return out;
}

}  // namespace quandle_lab
