#include "quandle_lab/quandle.hpp"

#include <algorithm>
#include <numeric>

#include "quandle_lab/error.hpp"
#include "quandle_lab/kernels.hpp"

namespace quandle_lab {

int GroupTable::identity() const {
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) ok = (*this)(e, a) == a && (*this)(a, e) == a;
    if (ok) return e;
  }
  throw Error(ErrorCode::GroupAxiomFailure, "no identity element");
}

int GroupTable::inverse(int a) const {
  const int e = identity();
  for (int b = 0; b < order; ++b) {
    if ((*this)(a, b) == e && (*this)(b, a) == e) return b;
  }
  throw Error(ErrorCode::GroupAxiomFailure, "element " + std::to_string(a) + " has no inverse");
}

void GroupTable::validate() const {
  if (order < 1 || mul.size() != static_cast<std::size_t>(order) * order) {
    throw Error(ErrorCode::GroupAxiomFailure, "table is not order x order");
  }
  for (int v : mul) {
    if (v < 0 || v >= order) throw Error(ErrorCode::GroupAxiomFailure, "product out of range");
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c))) {
          throw Error(ErrorCode::GroupAxiomFailure, "associativity fails at (" + std::to_string(a) + "," +
                                                        std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  for (int a = 0; a < order; ++a) inverse(a);
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "cyclic group order must be positive");
  GroupTable g;
  g.order = n;
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return g;
}

namespace {

GroupTable from_permutations(const std::vector<Permutation>& elems, std::vector<std::string> names) {
  GroupTable g;
  g.order = static_cast<int>(elems.size());
  g.names = std::move(names);
  g.mul.resize(elems.size() * elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const Permutation ab = elems[a] * elems[b];
      const auto it = std::find(elems.begin(), elems.end(), ab);
      g.mul[a * elems.size() + b] = static_cast<int>(it - elems.begin());
    }
  }
  return g;
}

}  // namespace

GroupTable GroupTable::symmetric(int degree) {
  if (degree < 1 || degree > 7) throw Error(ErrorCode::InvalidParams, "symmetric group degree must be in [1, 7]");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return from_permutations(elems, {});
}

GroupTable GroupTable::s3() {
  const Permutation r({1, 2, 0});
  const Permutation theta({0, 2, 1});
  const Permutation id = Permutation::identity(3);
  std::vector<Permutation> elems{id, r, r * r, theta, theta * r, theta * r * r};
  return from_permutations(elems, {"1", "r", "r^2", "theta", "theta r", "theta r^2"});
}

AxiomReport check_axioms(int n, const std::vector<int>& table, std::size_t max_failures) {
  if (n < 1 || table.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::MalformedTable, "table is not n x n");
  }
  for (int v : table) {
    if (v < 0 || v >= n) throw Error(ErrorCode::MalformedTable, "entry out of range");
  }
  auto at = [&](int x, int y) { return table[static_cast<std::size_t>(x) * n + y]; };

  AxiomReport report;
  auto note = [&](Axiom axiom, int x, int y, int z) {
    if (report.failures.size() < max_failures) report.failures.push_back({axiom, x, y, z});
  };

  bool bijective = true;
  for (int y = 0; y < n; ++y) {
    std::vector<int> preimage(n, -1);
    for (int x = 0; x < n; ++x) {
      const int v = at(x, y);
      if (preimage[v] >= 0) {
        bijective = false;
        note(Axiom::RightBijective, preimage[v], y, x);
      } else {
        preimage[v] = x;
      }
    }
  }

  bool distributive = true;
  const auto witness = find_distributivity_violation(n, table, Exec::Parallel);
  if (witness) {
    distributive = false;
    note(Axiom::Distributive, (*witness)[0], (*witness)[1], (*witness)[2]);
  }

  bool idempotent = true;
  for (int x = 0; x < n; ++x) {
    if (at(x, x) != x) {
      idempotent = false;
      note(Axiom::Idempotent, x, x, -1);
    }
  }

  report.rack = bijective && distributive;
  report.quandle = report.rack && idempotent;
  return report;
}

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::RightBijective:
      return "right-bijective";
    case Axiom::Distributive:
      return "distributive";
    case Axiom::Idempotent:
      return "idempotent";
  }
  return "unknown";
}

Quandle Quandle::from_table(int n, std::vector<int> table, std::string label) {
  const auto report = check_axioms(n, table, 1);
  if (!report.quandle) {
    const auto& f = report.failures.front();
    throw Error(ErrorCode::AxiomFailure, std::string(to_string(f.axiom)) + " fails at x=" + std::to_string(f.x) +
                                             " y=" + std::to_string(f.y) + " z=" + std::to_string(f.z));
  }
  return Quandle(n, std::move(table), std::move(label));
}

Quandle Quandle::dihedral(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = ((2 * y - x) % n + n) % n;
  }
  return Quandle(n, std::move(table), "dihedral " + std::to_string(n));
}

Quandle Quandle::trivial(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) std::fill_n(table.begin() + static_cast<std::ptrdiff_t>(x) * n, n, x);
  return Quandle(n, std::move(table), "trivial " + std::to_string(n));
}

Quandle Quandle::alexander(const FieldTable& field, FieldElem alpha) {
  if (!field.contains(alpha)) throw Error(ErrorCode::InvalidParams, "alpha is not a field element");
  if (alpha == field.zero()) throw Error(ErrorCode::InvalidParams, "alpha must be nonzero");
  const int q = field.order();
  const FieldElem beta = field.sub(field.one(), alpha);
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int x = 0; x < q; ++x) {
    const FieldElem ax = field.mul(alpha, FieldElem{static_cast<std::uint32_t>(x)});
    for (int y = 0; y < q; ++y) {
      table[static_cast<std::size_t>(x) * q + y] =
          static_cast<int>(field.add(ax, field.mul(beta, FieldElem{static_cast<std::uint32_t>(y)})).index);
    }
  }
  return Quandle(q, std::move(table),
                 "alexander q=" + std::to_string(q) + " alpha=" + field.to_string(alpha));
}

Quandle Quandle::conjugation(const GroupTable& group) {
  group.validate();
  const int n = group.order;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = group(group(y, x), group.inverse(y));
  }
  return from_table(n, std::move(table), "conj order " + std::to_string(n));
}

Quandle Quandle::core(const GroupTable& group) {
  group.validate();
  const int n = group.order;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = group(group(y, group.inverse(x)), y);
  }
  return from_table(n, std::move(table), "core order " + std::to_string(n));
}

Permutation Quandle::right_translation(int x) const {
  std::vector<int> images(n_);
  for (int y = 0; y < n_; ++y) images[y] = (*this)(y, x);
  return Permutation(std::move(images));
}

int Quandle::right_inverse(int y, int x) const {
  for (int z = 0; z < n_; ++z) {
    if ((*this)(z, x) == y) return z;
  }
  throw Error(ErrorCode::AxiomFailure, "right translation not surjective");
}

std::vector<std::vector<int>> orbits(const Quandle& q) {
  const int n = q.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int a = find(y);
      const int b = find(q(y, x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    const int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

bool is_connected(const Quandle& q) { return orbits(q).size() == 1; }

PermGroup inner_group(const Quandle& q, std::size_t cap) {
  std::vector<Permutation> gens;
  for (int x = 0; x < q.order(); ++x) {
    Permutation r = q.right_translation(x);
    if (std::find(gens.begin(), gens.end(), r) == gens.end()) gens.push_back(std::move(r));
  }
  return generate_group(gens, q.order(), cap);
}

bool is_cyclic_type(const Quandle& q) {
  const int n = q.order();
  if (n <= 2) throw Error(ErrorCode::OrderTooSmall, "cyclic type needs order > 2");
  const std::vector<int> expected{n - 1, 1};
  for (int i = 0; i < n; ++i) {
    const Permutation r = q.right_translation(i);
    if (r(i) != i || r.cycle_type() != expected) return false;
  }
  return true;
}

std::optional<int> dihedral_order(const Quandle& q) {
  if (q.order() < 3) return std::nullopt;
  const Quandle z = Quandle::dihedral(q.order());
  if (z.table() != q.table()) return std::nullopt;
  return q.order();
}

}  // namespace quandle_lab
