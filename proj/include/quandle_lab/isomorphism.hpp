#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quandle_lab/kernels.hpp"
#include "quandle_lab/quandle.hpp"

namespace quandle_lab {

/// Isomorphism-invariant data used to prune the search.
struct QuandleInvariants {
  int order = 0;
  std::vector<int> orbit_sizes;               // sorted
  std::vector<std::vector<int>> cycle_types;  // cycle type of every R_x, sorted
  long long inn_order = -1;                   // -1 when the closure cap was hit

  /// Equal up to inn_order, which is compared only when both are known.
  bool compatible(const QuandleInvariants& other) const;
};

QuandleInvariants invariants(const Quandle& q, std::size_t inn_cap = 200'000);

/// Greedy generating set: repeatedly adds the smallest element outside the current subquandle.
std::vector<int> generating_set(const Quandle& q);

bool is_homomorphism(const Quandle& a, const Quandle& b, const std::vector<int>& f);
bool is_isomorphism(const Quandle& a, const Quandle& b, const std::vector<int>& f);

struct IsoOptions {
  std::size_t budget = 50'000'000;  // candidate assignments before SearchBudgetExceeded
  std::size_t inn_cap = 200'000;
  Exec exec = Exec::Parallel;
};

/// Backtracking over images of a generating set, extended by closure. The Parallel policy
/// splits on the first generator's image and keeps the lowest-seed solution, so both policies
/// return the same map.
std::optional<std::vector<int>> find_isomorphism(const Quandle& a, const Quandle& b, const IsoOptions& options = {});

}  // namespace quandle_lab
