#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quandle_lab {

/// Coefficients over Z_p, little-endian (c0, c1, ..., cn).
using PolyZp = std::vector<int>;

struct FieldSpec {
  int p = 0;
  int n = 0;
  PolyZp modulus;  // monic, degree n

  int order() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// An element of GF(q), identified by the base-p value of its coefficient vector.
struct FieldElem {
  std::uint32_t index = 0;

  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

bool is_prime(long long v);
/// Returns (p, n) with q = p^n, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(long long q);
long long euler_phi(long long v);
std::vector<long long> prime_factors(long long v);

/// Rabin's test over Z_p; `f` must be monic.
bool is_irreducible_mod_p(const PolyZp& f, int p);

/// Least monic irreducible of degree n, ordered by the base-p value of (c0..c_{n-1}).
PolyZp least_irreducible(int p, int n);

/// Exact GF(p^n) with Zech-style exp/log tables relative to a fixed primitive element.
///
/// The table generator is the primitive element of smallest index. Immutable after
/// construction, so concurrent readers need no synchronisation.
class FieldTable {
 public:
  static constexpr int kMaxOrder = 1 << 16;

  /// Throws NotPrime, ReducibleModulus or InvalidParams.
  static FieldTable build(int p, int n, std::optional<PolyZp> modulus = std::nullopt);
  /// Same as build() after factoring q.
  static FieldTable of_order(long long q);

  const FieldSpec& spec() const { return spec_; }
  int order() const { return q_; }
  int characteristic() const { return spec_.p; }
  int degree() const { return spec_.n; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(long long v) const;
  FieldElem from_coeffs(std::span<const int> coeffs) const;
  std::span<const int> coeffs(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // DivisionByZero on 0
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, long long e) const;

  /// Primitive element the exp/log tables are built on.
  FieldElem generator() const { return exp_[1 % exp_.size()]; }
  /// generator()^k for any integer k.
  FieldElem exp(long long k) const;
  /// Log base generator(); ZeroArgument on 0.
  int log(FieldElem a) const;

  int multiplicative_order(FieldElem a) const;
  bool is_primitive(FieldElem a) const;
  /// All phi(q-1) primitive elements, ascending by index.
  std::vector<FieldElem> primitive_elements() const;
  /// Unique k in [0, q-2] with alpha^k = r. ZeroArgument, NotPrimitive.
  int discrete_log(FieldElem alpha, FieldElem r) const;

  /// Polynomial text in the variable `var`, e.g. "2x^2+x+2".
  std::string to_string(FieldElem a, char var = 'x') const;
  bool contains(FieldElem a) const { return a.index < static_cast<std::uint32_t>(q_); }

 private:
  FieldTable() = default;
  void check(FieldElem a) const;

  FieldSpec spec_;
  int q_ = 0;
  std::vector<int> digits_;            // q * n coefficient digits
  std::vector<std::uint32_t> pow_p_;   // p^i
  std::vector<FieldElem> exp_;         // generator^k, k in [0, q-2]
  std::vector<int> log_;               // inverse of exp_, log_[0] = -1
};

/// Polynomial text for Z_p coefficient vectors, little-endian, e.g. "x^3+x+1".
std::string poly_to_string(const PolyZp& coeffs, char var = 'x');

}  // namespace quandle_lab
