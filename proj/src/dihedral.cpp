#include "quandle_lab/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

cd root_of_unity(int r, long long e) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e % r) / r;
  return std::polar(1.0, angle);
}

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

/// "ω_r^i", "ω_r^{si}" or "(−1)^i"
std::string power_text(int r, int s) {
  if (2 * s == r) return "(−1)^i";
  if (s == 1) return "ω_" + std::to_string(r) + "^i";
  return "ω_" + std::to_string(r) + "^{" + std::to_string(s) + "i}";
}

std::string sum_text(int upper, int r, int s, const std::string& term) {
  return "Σ_{i=1}^{" + std::to_string(upper) + "} (1−" + power_text(r, s) + ") " + term;
}

}  // namespace

Vec difference_vector(int n, int a, int b) {
  Vec v = Vec::Zero(n);
  v(mod(a, n)) += 1.0;
  v(mod(b, n)) -= 1.0;
  return v;
}

int dihedral_root_order(int n) { return n % 2 == 0 ? n / 2 : n; }

int canonical_exponent(int n, int e) {
  const int m = dihedral_root_order(n);
  e = mod(e, m);
  if (n % 2 == 0) return std::min(e, m - e);
  return e % 2 == 0 ? e : n - e;
}

std::vector<ClosedFormSlot> dihedral_slots(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidParams, "dihedral slots need n >= 3");
  const QuandleRep reg = regular_rep(Quandle::dihedral(n));
  std::vector<ClosedFormSlot> slots;

  ClosedFormSlot one;
  one.name = "C1";
  one.generator = "1";
  one.label = IrrepLabel::c(1, 1);
  one.u = Vec::Ones(n);
  one.v = reg(1) * one.u;
  slots.push_back(one);

  if (n % 2 == 0) {
    ClosedFormSlot hat;
    hat.name = "C1̂";
    hat.generator = "1̂";
    hat.label = IrrepLabel::c(1, 1);
    hat.u = Vec(n);
    for (int i = 0; i < n; ++i) hat.u(i) = i % 2 == 0 ? 1.0 : -1.0;
    hat.v = reg(1) * hat.u;
    slots.push_back(hat);

    const int r = n / 2;
    for (int orbit = 0; orbit < 2; ++orbit) {
      for (int s = 1; 2 * s <= r; ++s) {
        ClosedFormSlot slot;
        slot.orbit = orbit;
        slot.s = s;
        slot.first = orbit == 0 ? 1 : r;
        slot.second = orbit == 0 ? 2 : 1;
        slot.name = "W_{" + std::to_string(s) + "," + std::to_string(orbit) + "}";
        const std::string term = orbit == 0 ? "v_{2i,2i+2}" : "v_{2i−1,2i+1}";
        slot.generator = sum_text(r - 1, r, s, term);
        slot.u = Vec::Zero(n);
        for (int i = 1; i <= r - 1; ++i) {
          const cd coeff = 1.0 - root_of_unity(r, static_cast<long long>(s) * i);
          slot.u += coeff * (orbit == 0 ? difference_vector(n, 2 * i, 2 * i + 2)
                                        : difference_vector(n, 2 * i - 1, 2 * i + 1));
        }
        slot.v = reg(slot.first) * slot.u;
        if (2 * s == r) {
          slot.label = orbit == 0 ? IrrepLabel::c(-1, 1) : IrrepLabel::c(1, -1);
        } else {
          slot.label = IrrepLabel::w(r, s);
        }
        slots.push_back(std::move(slot));
      }
    }
  } else {
    const int r = (n - 1) / 2;
    for (int s = 1; s <= r; ++s) {
      ClosedFormSlot slot;
      slot.s = s;
      slot.name = "W_{" + std::to_string(s) + "}";
      slot.generator = sum_text(n - 1, n, s, "v_{i,i+1}");
      slot.u = Vec::Zero(n);
      for (int i = 1; i <= n - 1; ++i) {
        slot.u += (1.0 - root_of_unity(n, static_cast<long long>(s) * i)) * difference_vector(n, i, i + 1);
      }
      slot.v = reg(slot.first) * slot.u;
      slot.label = IrrepLabel::w(n, 2 * s);
      slots.push_back(std::move(slot));
    }
  }
  return slots;
}

Decomposition dihedral_closed_form(int n) {
  const QuandleRep reg = regular_rep(Quandle::dihedral(n));
  Decomposition out;
  out.ambient = n;
  for (const auto& slot : dihedral_slots(n)) {
    Mat span(n, 2);
    span << slot.u, slot.v;
    Part part;
    part.space = Subspace{fix_phases(column_space(span))};
    part.label = slot.label;
    part.name = slot.name;
    part.generator = slot.generator;
    if (part.space.dim() != slot.label.dim) {
      throw Error(ErrorCode::VerificationFailure, slot.name + " spans dimension " + std::to_string(part.space.dim()));
    }
    if (max_invariance_residual(reg, part.space) > 1e-9) {
      throw Error(ErrorCode::VerificationFailure, slot.name + " is not invariant");
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

IrrepLabel read_dihedral_label(int n, const QuandleRep& rep, const Subspace& part, double tol) {
  const int k = part.dim();
  const Mat a = restrict_to(rep(1 % n), part);
  const Mat b = restrict_to(rep(2 % n), part);
  if (k == 1) {
    const cd l = a(0, 0);
    const cd m = b(0, 0);
    auto sign = [tol](cd z) { return std::abs(z - 1.0) < tol ? 1 : (std::abs(z + 1.0) < tol ? -1 : 0); };
    if (sign(l) != 0 && sign(m) != 0) return IrrepLabel::c(sign(l), sign(m));
    return IrrepLabel::opaque(1);
  }
  if (k != 2) return IrrepLabel::opaque(k);

  Eigen::ComplexEigenSolver<Mat> eig(a * b);
  const Vec u = eig.eigenvectors().col(0);
  Mat basis(2, 2);
  basis << u, a * u;
  const Eigen::FullPivLU<Mat> lu(basis);
  if (lu.rank() < 2) return IrrepLabel::opaque(2);
  const Mat bb = lu.solve(b * basis);
  if (std::abs(bb(0, 0)) > 1e-6 || std::abs(bb(1, 1)) > 1e-6) return IrrepLabel::opaque(2);

  const cd z = bb(0, 1);
  const int m = dihedral_root_order(n);
  const double turns = std::arg(z) / (2.0 * std::numbers::pi) * m;
  const int e = mod(std::llround(turns), m);
  if (std::abs(z - root_of_unity(m, e)) > 1e-6) return IrrepLabel::opaque(2);
  const int s = canonical_exponent(n, e);
  if (s == 0 || (n % 2 == 0 && 2 * s == m)) return IrrepLabel::opaque(2);
  return IrrepLabel::w(m, s);
}

std::vector<IrrepLabel> expected_dihedral_labels(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidParams, "dihedral labels need n >= 3");
  std::vector<IrrepLabel> out;
  if (n % 4 == 0) {
    const int k = n / 4;
    out = {IrrepLabel::c(1, 1), IrrepLabel::c(1, 1), IrrepLabel::c(1, -1), IrrepLabel::c(-1, 1)};
    for (int s = 1; s <= k - 1; ++s) out.insert(out.end(), 2, IrrepLabel::w(2 * k, s));
  } else if (n % 2 == 0) {
    const int k = (n - 2) / 4;
    out = {IrrepLabel::c(1, 1), IrrepLabel::c(1, 1)};
    for (int s = 1; s <= k; ++s) out.insert(out.end(), 2, IrrepLabel::w(2 * k + 1, s));
  } else {
    const int r = (n - 1) / 2;
    out = {IrrepLabel::c(1, 1)};
    for (int s = 1; s <= r; ++s) out.push_back(IrrepLabel::w(n, 2 * s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mat delta_basis(int n, DeltaBasis which) {
  if (which == DeltaBasis::Full) {
    Mat d(n, n - 1);
    for (int i = 1; i <= n - 1; ++i) d.col(i - 1) = difference_vector(n, i, i + 1);
    return d;
  }
  const int r = n / 2;
  Mat d(n, r - 1);
  for (int i = 1; i <= r - 1; ++i) {
    d.col(i - 1) = which == DeltaBasis::Even ? difference_vector(n, 2 * i, 2 * i + 2)
                                             : difference_vector(n, 2 * i - 1, 2 * i + 1);
  }
  return d;
}

Mat anti_diagonal_display(int k) {
  Mat m = Mat::Zero(k, k);
  for (int i = 0; i < k; ++i) m(i, k - 1 - i) = -1.0;
  return m;
}

Mat column_of_ones_display(int k) {
  Mat m = Mat::Zero(k, k);
  for (int i = 0; i < k; ++i) m(i, 0) = 1.0;
  for (int i = 1; i < k; ++i) m(i, k - i) = -1.0;
  return m;
}

Mat full_first_display(int k) {
  Mat m = Mat::Zero(k, k);
  for (int i = 0; i < k; ++i) m(i, k - 1) = 1.0;
  for (int i = 0; i + 1 < k; ++i) m(i, k - 2 - i) = -1.0;
  return m;
}

MatrixForms matrix_forms(int n, DeltaBasis which) {
  if (n < 3) throw Error(ErrorCode::InvalidParams, "matrix forms need n >= 3");
  const bool even = n % 2 == 0;
  if (even == (which == DeltaBasis::Full)) {
    throw Error(ErrorCode::InvalidParams, "even/odd difference bases need even n, the full one odd n");
  }
  MatrixForms forms;
  switch (which) {
    case DeltaBasis::Even:
      forms.first_translation = 1;
      forms.second_translation = 2;
      break;
    case DeltaBasis::Odd:
      forms.first_translation = n / 2;
      forms.second_translation = 1;
      break;
    case DeltaBasis::Full:
      forms.first_translation = 0;
      forms.second_translation = 1;
      break;
  }
  const QuandleRep reg = regular_rep(Quandle::dihedral(n));
  const Mat d = delta_basis(n, which);
  const auto cod = d.completeOrthogonalDecomposition();
  forms.first = cod.solve(reg(forms.first_translation) * d);
  forms.second = cod.solve(reg(forms.second_translation) * d);
  const int k = static_cast<int>(d.cols());
  forms.display_first = which == DeltaBasis::Full ? full_first_display(k) : anti_diagonal_display(k);
  forms.display_second = column_of_ones_display(k);
  forms.deviation = std::max((forms.first - forms.display_first).norm(), (forms.second - forms.display_second).norm());
  return forms;
}

Mat root_difference_matrix(int r) {
  Mat a(r - 1, r - 1);
  for (int s = 1; s <= r - 1; ++s) {
    for (int i = 1; i <= r - 1; ++i) a(s - 1, i - 1) = 1.0 - root_of_unity(r, static_cast<long long>(s) * i);
  }
  return a;
}

}  // namespace quandle_lab
