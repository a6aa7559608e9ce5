#include "quandle_lab/polysys.hpp"

#include <algorithm>
#include <utility>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const mpq_class& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(int k, const mpq_class& c) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(k) + 1, 0);
  coeffs[k] = c;
  return RationalPoly(std::move(coeffs));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPoly::leading() const { return coeffs_.empty() ? mpq_class(0) : coeffs_.back(); }

mpq_class RationalPoly::operator[](int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : mpq_class(0);
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return *this;
  const mpq_class lc = leading();
  std::vector<mpq_class> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] / lc;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : coeffs_) {
    const mpz_class v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (coeffs_.back() < 0) content = -content;
  std::vector<mpq_class> out;
  for (const auto& v : ints) out.emplace_back(v / content);
  return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + mpq_class(-1) * b; }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const mpq_class& c, const RationalPoly& a) {
  std::vector<mpq_class> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * a.coeffs_[i];
  return RationalPoly(std::move(out));
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  std::vector<mpq_class> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), 0);
  const mpq_class lc = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    const mpq_class f = rem[i] / lc;
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly pseudo_remainder(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const int delta = a.degree() - b.degree();
  if (delta < 0) return a;
  mpq_class scale = 1;
  for (int i = 0; i <= delta; ++i) scale *= b.leading();
  return divmod(scale * a, b).second;
}

RationalPoly gcd_euclid(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPoly gcd_subresultant(RationalPoly a, RationalPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  a = a.primitive();
  b = b.primitive();
  mpq_class g = 1;
  mpq_class h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    RationalPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return b.monic();
    if (r.degree() == 0) return RationalPoly::constant(1);
    mpq_class divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    a = std::move(b);
    b = mpq_class(1) / divisor * r;
    g = a.leading();
    // h <- g^δ / h^{δ-1}
    mpq_class next = 1;
    for (int i = 0; i < delta; ++i) next *= g;
    for (int i = 1; i < delta; ++i) next /= h;
    if (delta == 0) next = h;
    h = next;
  }
}

std::optional<int> LogInvolution::fixed_point() const {
  if (fixed_points.size() != 1) return std::nullopt;
  return fixed_points.front();
}

std::optional<int> LogInvolution::expected_fixed_point() const {
  if (p == 2) return std::nullopt;
  const FieldTable field = FieldTable::of_order(q);
  const int l = field.discrete_log(alpha, field.from_int(2));
  return ((-l) % (q - 1) + (q - 1)) % (q - 1);
}

namespace {

std::vector<int> log_map(const FieldTable& field, FieldElem alpha) {
  if (!field.is_primitive(alpha)) throw Error(ErrorCode::NotPrimitive, field.to_string(alpha) + " is not primitive");
  const int q = field.order();
  std::vector<int> phi(static_cast<std::size_t>(std::max(q - 1, 1)), 0);
  for (int k = 1; k <= q - 2; ++k) {
    phi[k] = field.discrete_log(alpha, field.sub(field.one(), field.pow(alpha, k)));
  }
  return phi;
}

}  // namespace

LogInvolution build_log_involution(const FieldTable& field, FieldElem alpha) {
  const int q = field.order();
  if (q <= 3) throw Error(ErrorCode::InvalidParams, "the log involution needs q > 3");
  LogInvolution inv;
  inv.q = q;
  inv.p = field.characteristic();
  inv.alpha = alpha;
  inv.phi = log_map(field, alpha);
  for (int k = 1; k <= q - 2; ++k) {
    const int f = inv.phi[k];
    if (f < 1 || f > q - 2 || inv.phi[f] != k) {
      throw Error(ErrorCode::NotInvolution, "φ(φ(" + std::to_string(k) + ")) != " + std::to_string(k));
    }
    if (f == k) inv.fixed_points.push_back(k);
  }
  return inv;
}

std::vector<RationalPoly> system_polynomials(const FieldTable& field, FieldElem alpha) {
  if (field.order() < 3) throw Error(ErrorCode::InvalidParams, "the system needs q >= 3");
  const std::vector<int> phi = log_map(field, alpha);
  std::vector<RationalPoly> out;
  for (int k = 1; k <= field.order() - 2; ++k) {
    out.push_back(RationalPoly::monomial(k) + RationalPoly::monomial(phi[k]) - RationalPoly::constant(1));
  }
  return out;
}

SystemVerdict common_gcd(const std::vector<RationalPoly>& polys, bool subresultant) {
  SystemVerdict verdict;
  if (polys.empty()) {
    verdict.gcd = RationalPoly::constant(1);
    verdict.no_common_solution = true;
    return verdict;
  }
  RationalPoly g = polys.front().monic();
  verdict.chain_degrees.push_back(g.degree());
  for (std::size_t i = 1; i < polys.size() && g.degree() > 0; ++i) {
    g = subresultant ? gcd_subresultant(g, polys[i]) : gcd_euclid(g, polys[i]);
    verdict.chain_degrees.push_back(g.degree());
  }
  verdict.no_common_solution = g.degree() == 0;
  verdict.gcd = std::move(g);
  return verdict;
}

SystemVerdict system_has_no_solution(const LogInvolution& inv, bool subresultant) {
  std::vector<RationalPoly> polys;
  for (int k = 1; k <= inv.q - 2; ++k) {
    polys.push_back(RationalPoly::monomial(k) + RationalPoly::monomial(inv.phi[k]) - RationalPoly::constant(1));
  }
  SystemVerdict verdict = common_gcd(polys, subresultant);
  verdict.no_fixed_point = inv.p == 2;
  return verdict;
}

bool sum_identity_holds(const LogInvolution& inv) {
  if (inv.p == 2) throw Error(ErrorCode::InvalidParams, "the sum identity is stated for odd characteristic");
  const auto n = inv.fixed_point();
  if (!n) return false;
  RationalPoly sum = RationalPoly::monomial(*n) - RationalPoly::constant(mpq_class(1, 2));
  for (int k = 1; k <= inv.q - 2; ++k) {
    if (k < inv.phi[k]) {
      sum = sum + RationalPoly::monomial(k) + RationalPoly::monomial(inv.phi[k]) - RationalPoly::constant(1);
    }
  }
  RationalPoly expected = RationalPoly::constant(mpq_class(-(inv.q - 2), 2));
  for (int i = 1; i <= inv.q - 2; ++i) expected = expected + RationalPoly::monomial(i);
  return sum == expected;
}

std::vector<AppendixRow> verify_appendix(int qmax, bool include_char2, Exec exec) {
  std::vector<FieldTable> fields;
  for (int q = 4; q <= qmax; ++q) {
    const auto pp = prime_power(q);
    if (!pp || (pp->first == 2 && !include_char2)) continue;
    fields.push_back(FieldTable::of_order(q));
  }
  struct Task {
    std::size_t field;
    FieldElem alpha;
    int alpha_log;
  };
  std::vector<Task> tasks;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    std::vector<Task> local;
    for (FieldElem a : fields[f].primitive_elements()) local.push_back({f, a, fields[f].log(a)});
    std::sort(local.begin(), local.end(), [](const Task& x, const Task& y) { return x.alpha_log < y.alpha_log; });
    tasks.insert(tasks.end(), local.begin(), local.end());
  }

  std::vector<AppendixRow> rows(tasks.size());
  auto run = [&](std::size_t i) {
    const Task& t = tasks[i];
    const FieldTable& field = fields[t.field];
    const LogInvolution inv = build_log_involution(field, t.alpha);
    const SystemVerdict verdict = system_has_no_solution(inv);
    AppendixRow& row = rows[i];
    row.q = field.order();
    row.alpha_log = t.alpha_log;
    row.fixed_point = inv.fixed_point();
    row.expected_fixed_point = inv.expected_fixed_point();
    row.gcd_degree = verdict.gcd.degree();
    row.no_common_solution = verdict.no_common_solution;
    row.no_fixed_point = verdict.no_fixed_point;
    row.sum_identity = inv.p != 2 && sum_identity_holds(inv);
  };
  const auto count = static_cast<long>(tasks.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  }
  return rows;
}

}  // namespace quandle_lab
