#include "quandle_lab/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

bool QuandleInvariants::compatible(const QuandleInvariants& other) const {
  if (order != other.order || orbit_sizes != other.orbit_sizes || cycle_types != other.cycle_types) return false;
  return inn_order < 0 || other.inn_order < 0 || inn_order == other.inn_order;
}

QuandleInvariants invariants(const Quandle& q, std::size_t inn_cap) {
  QuandleInvariants inv;
  inv.order = q.order();
  for (const auto& orbit : orbits(q)) inv.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  std::sort(inv.orbit_sizes.begin(), inv.orbit_sizes.end());
  for (int x = 0; x < q.order(); ++x) inv.cycle_types.push_back(q.right_translation(x).cycle_type());
  std::sort(inv.cycle_types.begin(), inv.cycle_types.end());
  try {
    inv.inn_order = static_cast<long long>(inner_group(q, inn_cap).order());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClosureBudgetExceeded) throw;
  }
  return inv;
}

namespace {

/// Elements added to a subquandle when one generator joins, each with a derivation e = l ▷ r.
struct Stage {
  int generator = -1;
  std::vector<std::array<int, 3>> derived;  // (e, l, r)
  std::vector<int> members;                 // generator followed by derived elements
};

std::vector<Stage> closure_stages(const Quandle& q) {
  const int n = q.order();
  std::vector<char> in(n, 0);
  std::vector<int> elems;
  std::vector<Stage> stages;
  while (static_cast<int>(elems.size()) < n) {
    int g = 0;
    while (in[g]) ++g;
    Stage stage;
    stage.generator = g;
    stage.members.push_back(g);
    in[g] = 1;
    const std::size_t start = elems.size();
    elems.push_back(g);
    // each new element is combined with every element seen so far, in both orders
    for (std::size_t head = start; head < elems.size(); ++head) {
      const int a = elems[head];
      for (std::size_t j = 0; j <= head; ++j) {
        const int b = elems[j];
        for (const auto& [l, r] : {std::pair{a, b}, std::pair{b, a}}) {
          const int e = q(l, r);
          if (!in[e]) {
            in[e] = 1;
            elems.push_back(e);
            stage.derived.push_back({e, l, r});
            stage.members.push_back(e);
          }
        }
      }
    }
    stages.push_back(std::move(stage));
  }
  return stages;
}

class Searcher {
 public:
  Searcher(const Quandle& a, const Quandle& b) : a_(a), b_(b), stages_(closure_stages(a)) {
    for (int x = 0; x < a.order(); ++x) sig_a_.push_back(a.right_translation(x).cycle_type());
    for (int x = 0; x < b.order(); ++x) sig_b_.push_back(b.right_translation(x).cycle_type());
    std::vector<char> seen(a.order(), 0);
    for (const auto& stage : stages_) {
      std::vector<int> prior;
      for (int x = 0; x < a.order(); ++x) {
        if (seen[x]) prior.push_back(x);
      }
      prior_.push_back(std::move(prior));
      for (int m : stage.members) seen[m] = 1;
    }
  }

  std::vector<int> seeds() const {
    std::vector<int> out;
    const int g = stages_.front().generator;
    for (int y = 0; y < b_.order(); ++y) {
      if (sig_b_[y] == sig_a_[g]) out.push_back(y);
    }
    return out;
  }

  /// DFS with the first generator fixed to `seed`. Returns false when the budget runs out.
  bool run(int seed, std::atomic<std::size_t>& nodes, std::size_t budget, std::vector<int>& found) {
    std::vector<int> f(a_.order(), -1);
    std::vector<char> used(b_.order(), 0);
    budget_exceeded_ = false;
    const bool ok = place(0, seed, f, used, nodes, budget);
    if (ok) found = f;
    return !budget_exceeded_;
  }

 private:
  bool place(std::size_t s, int image, std::vector<int>& f, std::vector<char>& used,
             std::atomic<std::size_t>& nodes, std::size_t budget) {
    if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
      budget_exceeded_ = true;
      return false;
    }
    const Stage& stage = stages_[s];
    std::vector<int> assigned;
    auto undo = [&] {
      for (int e : assigned) {
        used[f[e]] = 0;
        f[e] = -1;
      }
    };
    auto assign = [&](int e, int v) {
      if (used[v] || sig_a_[e] != sig_b_[v]) return false;
      f[e] = v;
      used[v] = 1;
      assigned.push_back(e);
      return true;
    };

    bool ok = assign(stage.generator, image);
    for (std::size_t i = 0; ok && i < stage.derived.size(); ++i) {
      const auto [e, l, r] = stage.derived[i];
      ok = assign(e, b_(f[l], f[r]));
    }
    // homomorphism law on every pair touching the new stage
    if (ok) {
      const auto& prior = prior_[s];
      for (std::size_t i = 0; ok && i < stage.members.size(); ++i) {
        const int m = stage.members[i];
        for (int x : prior) {
          if (f[a_(m, x)] != b_(f[m], f[x]) || f[a_(x, m)] != b_(f[x], f[m])) {
            ok = false;
            break;
          }
        }
        for (std::size_t j = 0; ok && j < stage.members.size(); ++j) {
          const int o = stage.members[j];
          if (f[a_(m, o)] != b_(f[m], f[o])) ok = false;
        }
      }
    }
    if (ok) {
      if (s + 1 == stages_.size()) return true;
      const int g = stages_[s + 1].generator;
      for (int v = 0; v < b_.order() && !budget_exceeded_; ++v) {
        if (!used[v] && sig_b_[v] == sig_a_[g] && place(s + 1, v, f, used, nodes, budget)) return true;
      }
    }
    undo();
    return false;
  }

  const Quandle& a_;
  const Quandle& b_;
  std::vector<Stage> stages_;
  std::vector<std::vector<int>> prior_;  // elements closed before each stage
  std::vector<std::vector<int>> sig_a_;
  std::vector<std::vector<int>> sig_b_;
  bool budget_exceeded_ = false;
};

}  // namespace

std::vector<int> generating_set(const Quandle& q) {
  std::vector<int> gens;
  for (const auto& stage : closure_stages(q)) gens.push_back(stage.generator);
  return gens;
}

bool is_homomorphism(const Quandle& a, const Quandle& b, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != a.order()) return false;
  for (int v : f) {
    if (v < 0 || v >= b.order()) return false;
  }
  for (int x = 0; x < a.order(); ++x) {
    for (int y = 0; y < a.order(); ++y) {
      if (f[a(x, y)] != b(f[x], f[y])) return false;
    }
  }
  return true;
}

bool is_isomorphism(const Quandle& a, const Quandle& b, const std::vector<int>& f) {
  if (a.order() != b.order() || !is_homomorphism(a, b, f)) return false;
  std::vector<char> hit(b.order(), 0);
  for (int v : f) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::optional<std::vector<int>> find_isomorphism(const Quandle& a, const Quandle& b, const IsoOptions& options) {
  if (a.order() != b.order()) return std::nullopt;
  if (!invariants(a, options.inn_cap).compatible(invariants(b, options.inn_cap))) return std::nullopt;

  const std::vector<int> seeds = Searcher(a, b).seeds();
  std::atomic<std::size_t> nodes{0};
  const long count = static_cast<long>(seeds.size());

  if (options.exec == Exec::Serial) {
    Searcher searcher(a, b);
    for (long i = 0; i < count; ++i) {
      std::vector<int> found;
      if (!searcher.run(seeds[i], nodes, options.budget, found)) {
        throw Error(ErrorCode::SearchBudgetExceeded, "isomorphism search budget exhausted");
      }
      if (!found.empty()) return found;
    }
    return std::nullopt;
  }

  std::atomic<long> best{LONG_MAX};
  std::atomic<bool> exhausted{false};
  std::vector<std::vector<int>> results(count);
#pragma omp parallel
  {
    Searcher searcher(a, b);
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      if (i > best.load() || exhausted.load()) continue;
      std::vector<int> found;
      if (!searcher.run(seeds[i], nodes, options.budget, found)) {
        exhausted.store(true);
        continue;
      }
      if (!found.empty()) {
        results[i] = std::move(found);
        long cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  }
  if (exhausted.load()) throw Error(ErrorCode::SearchBudgetExceeded, "isomorphism search budget exhausted");
  if (best.load() == LONG_MAX) return std::nullopt;
  return results[best.load()];
}

}  // namespace quandle_lab
