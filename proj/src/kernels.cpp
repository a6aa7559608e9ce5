#include "quandle_lab/kernels.hpp"

#include <algorithm>
#include <climits>

#ifdef QUANDLE_LAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace quandle_lab {

int max_threads() {
#ifdef QUANDLE_LAB_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

bool distributive_row(int n, const std::vector<int>& t, int x, std::array<int, 3>& witness) {
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  for (int y = 0; y < n; ++y) {
    const int xy = at(x, y);
    for (int z = 0; z < n; ++z) {
      if (at(xy, z) != at(at(x, z), at(y, z))) {
        witness = {x, y, z};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::array<int, 3>> find_distributivity_violation(int n, const std::vector<int>& table, Exec exec) {
  std::array<int, 3> witness{};
  if (exec == Exec::Serial) {
    for (int x = 0; x < n; ++x) {
      if (!distributive_row(n, table, x, witness)) return witness;
    }
    return std::nullopt;
  }

  // rows are independent; keep the lowest failing row so the answer matches the serial scan
  int first_bad = INT_MAX;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first_bad)
  for (int x = 0; x < n; ++x) {
    std::array<int, 3> w{};
    if (x < first_bad && !distributive_row(n, table, x, w)) first_bad = std::min(first_bad, x);
  }
  if (first_bad == INT_MAX) return std::nullopt;
  distributive_row(n, table, first_bad, witness);
  return witness;
}

Eigen::MatrixXcd group_average(const std::vector<Eigen::MatrixXcd>& group,
                               const std::vector<Eigen::MatrixXcd>& inverses, const Eigen::MatrixXcd& h,
                               Exec exec) {
  const Eigen::Index d = h.rows();
  const auto count = static_cast<long>(group.size());
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);

  // fixed-size chunks summed in index order, so both policies round identically
  constexpr long kChunk = 16;
  const long chunks = (count + kChunk - 1) / kChunk;
  std::vector<Eigen::MatrixXcd> partial(chunks, Eigen::MatrixXcd::Zero(d, d));
  auto run_chunk = [&](long c) {
    const long end = std::min(count, (c + 1) * kChunk);
    for (long i = c * kChunk; i < end; ++i) partial[c].noalias() += group[i] * h * inverses[i];
  };
  if (exec == Exec::Serial) {
    for (long c = 0; c < chunks; ++c) run_chunk(c);
  } else {
#pragma omp parallel for schedule(static)
    for (long c = 0; c < chunks; ++c) run_chunk(c);
  }
  for (const auto& p : partial) sum += p;
  return sum / static_cast<double>(count);
}

}  // namespace quandle_lab
