#pragma once

#include <initializer_list>
#include <vector>

#include "quandle_lab/linalg.hpp"

namespace test_util {

using quandle_lab::cd;
using quandle_lab::Mat;

inline Mat rows(std::initializer_list<std::initializer_list<cd>> entries) {
  Mat m(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : entries) {
    Eigen::Index k = 0;
    for (const auto& v : r) m(i, k++) = v;
    ++i;
  }
  return m;
}

/// Permutation matrix with m(images[x], x) = 1.
inline Mat permutation_matrix(const std::vector<int>& images) {
  const auto n = static_cast<Eigen::Index>(images.size());
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) m(images[static_cast<std::size_t>(x)], x) = 1.0;
  return m;
}

}  // namespace test_util
