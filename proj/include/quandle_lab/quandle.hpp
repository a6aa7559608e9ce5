#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quandle_lab/finite_field.hpp"
#include "quandle_lab/permutation.hpp"

namespace quandle_lab {

/// A finite group as a Cayley table, mul[a * order + b] = a·b.
struct GroupTable {
  int order = 0;
  std::vector<int> mul;
  std::vector<std::string> names;  // optional element names

  int operator()(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  int identity() const;
  int inverse(int a) const;
  /// Throws GroupAxiomFailure on closure, associativity, identity or inverse failures.
  void validate() const;

  static GroupTable cyclic(int n);
  static GroupTable symmetric(int degree);
  /// S3 ordered as 1, r, r², θ, θr, θr² with r = (0 1 2) and θ: i ↦ -i mod 3.
  static GroupTable s3();
};

enum class Axiom { RightBijective, Distributive, Idempotent };

struct AxiomFailure {
  Axiom axiom;
  int x = -1;
  int y = -1;
  int z = -1;
};

std::string_view to_string(Axiom axiom) noexcept;

struct AxiomReport {
  bool rack = false;
  bool quandle = false;
  std::vector<AxiomFailure> failures;  // capped witness list
};

/// Exhaustive axiom check of a candidate n×n table (row-major, table[x*n+y] = x▷y).
/// MalformedTable when the table is not square or has out-of-range entries.
AxiomReport check_axioms(int n, const std::vector<int>& table, std::size_t max_failures = 32);

/// Finite quandle as a dense Cayley table; axioms are verified on construction.
class Quandle {
 public:
  /// AxiomFailure (with the first witness) if the table is not a quandle.
  static Quandle from_table(int n, std::vector<int> table, std::string label = {});

  static Quandle dihedral(int n);
  static Quandle trivial(int n);
  /// x▷y = αx + (1-α)y over GF(q); InvalidParams for α = 0.
  static Quandle alexander(const FieldTable& field, FieldElem alpha);
  /// x▷y = y x y^{-1}
  static Quandle conjugation(const GroupTable& group);
  /// x▷y = y x^{-1} y
  static Quandle core(const GroupTable& group);

  int order() const { return n_; }
  int operator()(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  const std::vector<int>& table() const { return table_; }
  const std::string& label() const { return label_; }

  /// R_x : y ↦ y▷x
  Permutation right_translation(int x) const;
  /// y ▷^{-1} x
  int right_inverse(int y, int x) const;

  friend bool operator==(const Quandle& a, const Quandle& b) { return a.n_ == b.n_ && a.table_ == b.table_ && a.label_ == b.label_; }

 private:
  Quandle(int n, std::vector<int> table, std::string label)
      : n_(n), table_(std::move(table)), label_(std::move(label)) {}

  int n_ = 0;
  std::vector<int> table_;
  std::string label_;
};

/// Orbits under Inn(Q), each sorted, ordered by smallest element.
std::vector<std::vector<int>> orbits(const Quandle& q);
bool is_connected(const Quandle& q);

/// Inn(Q) = ⟨R_x⟩; ClosureBudgetExceeded past `cap`.
PermGroup inner_group(const Quandle& q, std::size_t cap = 1'000'000);

/// Every R_i fixes only i and is an (n-1)-cycle on the rest. OrderTooSmall for n <= 2.
bool is_cyclic_type(const Quandle& q);

/// n when q is exactly the dihedral quandle Z_n (n >= 3), else nullopt.
std::optional<int> dihedral_order(const Quandle& q);

}  // namespace quandle_lab
