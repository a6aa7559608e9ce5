#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace quandle_lab {

/// A bijection of [0, n), stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidParams unless `images` is a bijection of [0, n).
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  /// Cycle lengths in non-increasing order, fixed points included as 1s.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Finite permutation group given by generators and its enumerated element set.
struct PermGroup {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // identity first, then BFS order

  std::size_t order() const { return elements.size(); }
};

/// Closure of `generators` under composition. ClosureBudgetExceeded past `cap` elements.
PermGroup generate_group(std::span<const Permutation> generators, int degree, std::size_t cap = 1'000'000);

/// Two involutions a, b with |ab| = m and 2m = |G|, certifying G = D_m.
struct DihedralWitness {
  int a = -1;  // indices into PermGroup::elements
  int b = -1;
  int m = 0;
};

/// Dihedral-presentation recognition: looks for involutions among the generators first,
/// then among all elements.
std::optional<DihedralWitness> recognize_dihedral(const PermGroup& group);

}  // namespace quandle_lab
