#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quandle_lab/finite_field.hpp"
#include "quandle_lab/kernels.hpp"

namespace quandle_lab {

/// Dense little-endian polynomial over Q; no trailing zero coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);
  static RationalPoly constant(const mpq_class& c);
  /// c·x^k
  static RationalPoly monomial(int k, const mpq_class& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class leading() const;
  mpq_class operator[](int i) const;

  RationalPoly monic() const;
  /// Divides out the content, sign chosen so the leading coefficient is positive.
  RationalPoly primitive() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const mpq_class& c, const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "2*x^3 - 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// (quotient, remainder) over Q. DivisionByZero for b = 0.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
/// lc(b)^{deg a - deg b + 1} a mod b
RationalPoly pseudo_remainder(const RationalPoly& a, const RationalPoly& b);

/// Monic gcd by plain Euclid over Q (reference).
RationalPoly gcd_euclid(RationalPoly a, RationalPoly b);
/// Monic gcd by the subresultant pseudo-remainder sequence.
RationalPoly gcd_subresultant(RationalPoly a, RationalPoly b);

/// k ↦ log_α(1 - α^k) on {1, ..., q-2}.
struct LogInvolution {
  int q = 0;
  int p = 0;
  FieldElem alpha;
  std::vector<int> phi;            // phi[k], index 0 unused
  std::vector<int> fixed_points;

  std::optional<int> fixed_point() const;
  /// -log_α 2 mod (q-1); nullopt in characteristic 2.
  std::optional<int> expected_fixed_point() const;
};

/// NotPrimitive for α, InvalidParams for q <= 3, NotInvolution if φ∘φ ≠ id.
LogInvolution build_log_involution(const FieldTable& field, FieldElem alpha);

/// x^k + x^{φ(k)} - 1 for k = 1..q-2 (defined for q >= 3).
std::vector<RationalPoly> system_polynomials(const FieldTable& field, FieldElem alpha);

struct SystemVerdict {
  std::vector<int> chain_degrees;  // degree of the running gcd after each polynomial
  RationalPoly gcd;
  bool no_common_solution = false;
  bool no_fixed_point = false;  // characteristic 2: the involution has no fixed point
};

/// Iterated gcd of the system polynomials; no common complex root iff it is a nonzero constant.
SystemVerdict system_has_no_solution(const LogInvolution& inv, bool subresultant = true);
/// Same verdict from the raw polynomial list.
SystemVerdict common_gcd(const std::vector<RationalPoly>& polys, bool subresultant = true);

/// Sum of one equation per involution pair plus x^N - 1/2 equals Σ_{i=1}^{q-2} x^i - (q-2)/2.
/// Odd characteristic only (InvalidParams otherwise).
bool sum_identity_holds(const LogInvolution& inv);

struct AppendixRow {
  int q = 0;
  int alpha_log = 0;                 // relative to the field's table generator
  std::optional<int> fixed_point;
  std::optional<int> expected_fixed_point;
  int gcd_degree = 0;
  bool no_common_solution = false;
  bool no_fixed_point = false;
  bool sum_identity = false;
};

/// Every prime power 3 < q <= qmax and every primitive α, ordered by (q, alpha_log).
/// Odd characteristic only unless include_char2.
std::vector<AppendixRow> verify_appendix(int qmax, bool include_char2 = false, Exec exec = Exec::Parallel);

}  // namespace quandle_lab
