#include "quandle_lab/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) throw Error(ErrorCode::InvalidParams, "not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<int> images(b.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a.images_[b.images_[x]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<int>(x);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  const int n = size();
  std::vector<char> seen(n, 0);
  std::vector<int> lengths;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int Permutation::order() const {
  long long result = 1;
  for (int len : cycle_type()) result = std::lcm(result, static_cast<long long>(len));
  return static_cast<int>(result);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

PermGroup generate_group(std::span<const Permutation> generators, int degree, std::size_t cap) {
  PermGroup group;
  group.generators.assign(generators.begin(), generators.end());
  std::unordered_map<Permutation, int, PermutationHash> index;
  auto id = Permutation::identity(degree);
  index.emplace(id, 0);
  group.elements.push_back(std::move(id));
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (const auto& g : group.generators) {
      Permutation next = g * group.elements[head];
      if (index.contains(next)) continue;
      if (group.elements.size() >= cap) {
        throw Error(ErrorCode::ClosureBudgetExceeded, "group order exceeds cap " + std::to_string(cap));
      }
      index.emplace(next, static_cast<int>(group.elements.size()));
      group.elements.push_back(std::move(next));
    }
  }
  return group;
}

std::optional<DihedralWitness> recognize_dihedral(const PermGroup& group) {
  const std::size_t order = group.order();
  if (order < 4 || order % 2 != 0) return std::nullopt;
  const int m = static_cast<int>(order / 2);

  std::unordered_map<Permutation, int, PermutationHash> index;
  for (std::size_t i = 0; i < group.elements.size(); ++i) index.emplace(group.elements[i], static_cast<int>(i));

  auto involutions_of = [&](const std::vector<Permutation>& pool) {
    std::vector<int> out;
    for (const auto& g : pool) {
      if (!g.is_identity() && (g * g).is_identity()) {
        auto it = index.find(g);
        if (it != index.end() && std::find(out.begin(), out.end(), it->second) == out.end()) {
          out.push_back(it->second);
        }
      }
    }
    return out;
  };

  for (const auto* pool : {&group.generators, &group.elements}) {
    const auto invs = involutions_of(*pool);
    for (std::size_t i = 0; i < invs.size(); ++i) {
      for (std::size_t j = i + 1; j < invs.size(); ++j) {
        const auto& a = group.elements[invs[i]];
        const auto& b = group.elements[invs[j]];
        // two distinct involutions generate a dihedral group of order 2|ab|
        if ((a * b).order() == m) return DihedralWitness{invs[i], invs[j], m};
      }
    }
  }
  return std::nullopt;
}

}  // namespace quandle_lab
