#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace quandle_lab {

/// Execution policy for kernels that have both a serial reference and an OpenMP version.
/// Both policies return identical results; the serial one is kept as the test oracle.
enum class Exec { Serial, Parallel };

/// Number of threads a Parallel kernel may use (1 without OpenMP).
int max_threads();

/// Lexicographically smallest (x, y, z) with (x▷y)▷z != (x▷z)▷(y▷z), if any.
/// `table` is row-major n×n with in-range entries.
std::optional<std::array<int, 3>> find_distributivity_violation(int n, const std::vector<int>& table, Exec exec);

/// (1/|G|) Σ_g g H g^{-1}, with `inverses[i]` the inverse of `group[i]`.
Eigen::MatrixXcd group_average(const std::vector<Eigen::MatrixXcd>& group,
                               const std::vector<Eigen::MatrixXcd>& inverses, const Eigen::MatrixXcd& h,
                               Exec exec);

}  // namespace quandle_lab
