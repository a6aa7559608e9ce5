#include "quandle_lab/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

int mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void trim(PolyZp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int inverse_mod(int a, int p) {
  // p prime, a != 0 mod p
  long long result = 1, base = mod(a, p);
  long long e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

PolyZp poly_rem(PolyZp a, const PolyZp& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inverse_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % p);
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = mod(a[shift + i] - static_cast<long long>(factor) * b[i], p);
    }
    trim(a);
  }
  return a;
}

PolyZp poly_mulmod(const PolyZp& a, const PolyZp& b, const PolyZp& m, int p) {
  if (a.empty() || b.empty()) return {};
  PolyZp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
  }
  return poly_rem(std::move(r), m, p);
}

PolyZp poly_gcd(PolyZp a, PolyZp b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyZp r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by repeated p-th powering.
PolyZp frobenius_power_of_x(const PolyZp& f, int p, int k) {
  PolyZp cur = poly_rem(PolyZp{0, 1}, f, p);
  for (int step = 0; step < k; ++step) {
    PolyZp result{1};
    PolyZp base = cur;
    int e = p;
    while (e > 0) {
      if (e & 1) result = poly_mulmod(result, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    cur = std::move(result);
  }
  return cur;
}

PolyZp minus_x(PolyZp g, int p) {
  if (g.size() < 2) g.resize(2, 0);
  g[1] = mod(g[1] - 1, p);
  trim(g);
  return g;
}

}  // namespace

int FieldSpec::order() const {
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  return static_cast<int>(q);
}

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  for (long long d = 2; d <= q; ++d) {
    if (q % d != 0) continue;
    int n = 0;
    long long rest = q;
    while (rest % d == 0) {
      rest /= d;
      ++n;
    }
    if (rest != 1) return std::nullopt;
    return std::pair<int, int>{static_cast<int>(d), n};
  }
  return std::nullopt;
}

std::vector<long long> prime_factors(long long v) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

long long euler_phi(long long v) {
  long long result = v;
  for (long long f : prime_factors(v)) result = result / f * (f - 1);
  return result;
}

bool is_irreducible_mod_p(const PolyZp& f_in, int p) {
  PolyZp f = f_in;
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  if (n <= 3) {
    // degree <= 3 is reducible iff it has a root
    for (int x = 0; x < p; ++x) {
      long long v = 0;
      for (int i = n; i >= 0; --i) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  if (!minus_x(frobenius_power_of_x(f, p, n), p).empty()) return false;
  for (long long l : prime_factors(n)) {
    PolyZp g = minus_x(frobenius_power_of_x(f, p, n / static_cast<int>(l)), p);
    PolyZp d = poly_gcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

PolyZp least_irreducible(int p, int n) {
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (long long v = 0; v < count; ++v) {
    PolyZp f(n + 1, 0);
    long long rest = v;
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    f[n] = 1;
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw Error(ErrorCode::InvalidParams, "no irreducible polynomial found");
}

FieldTable FieldTable::of_order(long long q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return build(pp->first, pp->second);
}

FieldTable FieldTable::build(int p, int n, std::optional<PolyZp> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::InvalidParams, "exponent must be >= 1");
  long long q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::InvalidParams, "field order exceeds table limit");
  }

  PolyZp m;
  if (modulus) {
    m = *modulus;
    for (int& c : m) c = mod(c, p);
    if (static_cast<int>(m.size()) != n + 1 || m.back() != 1) {
      throw Error(ErrorCode::InvalidParams, "modulus must be monic of degree " + std::to_string(n));
    }
    if (!is_irreducible_mod_p(m, p)) {
      throw Error(ErrorCode::ReducibleModulus, poly_to_string(m) + " is reducible mod " + std::to_string(p));
    }
  } else {
    m = least_irreducible(p, n);
  }

  FieldTable F;
  F.spec_ = FieldSpec{p, n, m};
  F.q_ = static_cast<int>(q);
  F.pow_p_.resize(n + 1);
  F.pow_p_[0] = 1;
  for (int i = 1; i <= n; ++i) F.pow_p_[i] = F.pow_p_[i - 1] * p;
  F.digits_.resize(static_cast<std::size_t>(q) * n);
  for (int idx = 0; idx < q; ++idx) {
    int rest = idx;
    for (int i = 0; i < n; ++i) {
      F.digits_[static_cast<std::size_t>(idx) * n + i] = rest % p;
      rest /= p;
    }
  }

  auto to_poly = [&](int idx) {
    PolyZp f(F.digits_.begin() + static_cast<std::ptrdiff_t>(idx) * n,
             F.digits_.begin() + static_cast<std::ptrdiff_t>(idx + 1) * n);
    trim(f);
    return f;
  };
  auto to_index = [&](const PolyZp& f) {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < f.size(); ++i) idx += static_cast<std::uint32_t>(f[i]) * F.pow_p_[i];
    return idx;
  };
  auto slow_pow = [&](const PolyZp& a, long long e) {
    PolyZp result{1}, base = a;
    while (e > 0) {
      if (e & 1) result = poly_mulmod(result, base, m, p);
      base = poly_mulmod(base, base, m, p);
      e >>= 1;
    }
    return result;
  };

  const long long group = q - 1;
  const auto factors = prime_factors(group);
  int gen = -1;
  for (int idx = 1; idx < q && gen < 0; ++idx) {
    const PolyZp a = to_poly(idx);
    bool primitive = true;
    for (long long f : factors) {
      PolyZp r = slow_pow(a, group / f);
      if (r.size() == 1 && r[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (group == 1) primitive = (idx == 1);
    if (primitive) gen = idx;
  }

  F.exp_.resize(static_cast<std::size_t>(group));
  F.log_.assign(static_cast<std::size_t>(q), -1);
  const PolyZp g = to_poly(gen);
  PolyZp cur{1};
  for (long long k = 0; k < group; ++k) {
    const std::uint32_t idx = to_index(cur);
    F.exp_[k] = FieldElem{idx};
    F.log_[idx] = static_cast<int>(k);
    cur = poly_mulmod(cur, g, m, p);
  }
  return F;
}

void FieldTable::check(FieldElem a) const {
  if (!contains(a)) throw Error(ErrorCode::InvalidParams, "element index out of range");
}

FieldElem FieldTable::from_int(long long v) const { return FieldElem{static_cast<std::uint32_t>(mod(v, spec_.p))}; }

FieldElem FieldTable::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > spec_.n) {
    throw Error(ErrorCode::InvalidParams, "too many coefficients for GF(" + std::to_string(q_) + ")");
  }
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) idx += static_cast<std::uint32_t>(mod(coeffs[i], spec_.p)) * pow_p_[i];
  return FieldElem{idx};
}

std::span<const int> FieldTable::coeffs(FieldElem a) const {
  check(a);
  return {digits_.data() + static_cast<std::size_t>(a.index) * spec_.n, static_cast<std::size_t>(spec_.n)};
}

FieldElem FieldTable::add(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  const int* da = digits_.data() + static_cast<std::size_t>(a.index) * spec_.n;
  const int* db = digits_.data() + static_cast<std::size_t>(b.index) * spec_.n;
  std::uint32_t idx = 0;
  for (int i = 0; i < spec_.n; ++i) {
    int s = da[i] + db[i];
    if (s >= spec_.p) s -= spec_.p;
    idx += static_cast<std::uint32_t>(s) * pow_p_[i];
  }
  return FieldElem{idx};
}

FieldElem FieldTable::neg(FieldElem a) const {
  check(a);
  const int* da = digits_.data() + static_cast<std::size_t>(a.index) * spec_.n;
  std::uint32_t idx = 0;
  for (int i = 0; i < spec_.n; ++i) {
    idx += static_cast<std::uint32_t>(da[i] == 0 ? 0 : spec_.p - da[i]) * pow_p_[i];
  }
  return FieldElem{idx};
}

FieldElem FieldTable::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldTable::mul(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  if (a.index == 0 || b.index == 0) return zero();
  const int group = q_ - 1;
  int k = log_[a.index] + log_[b.index];
  if (k >= group) k -= group;
  return exp_[k];
}

FieldElem FieldTable::inv(FieldElem a) const {
  check(a);
  if (a.index == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const int group = q_ - 1;
  return exp_[(group - log_[a.index]) % group];
}

FieldElem FieldTable::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem FieldTable::pow(FieldElem a, long long e) const {
  check(a);
  if (a.index == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  const long long group = q_ - 1;
  long long k = (static_cast<long long>(log_[a.index]) * (((e % group) + group) % group)) % group;
  return exp_[k];
}

FieldElem FieldTable::exp(long long k) const {
  const long long group = q_ - 1;
  return exp_[((k % group) + group) % group];
}

int FieldTable::log(FieldElem a) const {
  check(a);
  if (a.index == 0) throw Error(ErrorCode::ZeroArgument, "log of zero");
  return log_[a.index];
}

int FieldTable::multiplicative_order(FieldElem a) const {
  const int group = q_ - 1;
  return group / std::gcd(group, log(a));
}

bool FieldTable::is_primitive(FieldElem a) const {
  check(a);
  return a.index != 0 && multiplicative_order(a) == q_ - 1;
}

std::vector<FieldElem> FieldTable::primitive_elements() const {
  std::vector<FieldElem> out;
  for (std::uint32_t i = 1; i < static_cast<std::uint32_t>(q_); ++i) {
    if (is_primitive(FieldElem{i})) out.push_back(FieldElem{i});
  }
  return out;
}

int FieldTable::discrete_log(FieldElem alpha, FieldElem r) const {
  if (r.index == 0) throw Error(ErrorCode::ZeroArgument, "discrete log of zero");
  if (!is_primitive(alpha)) throw Error(ErrorCode::NotPrimitive, to_string(alpha) + " is not primitive");
  // alpha = g^a, r = g^b; want k with a*k = b mod (q-1), a a unit.
  const long long group = q_ - 1;
  const long long a = log(alpha), b = log(r);
  long long inv_a = 1;
  {
    // extended Euclid for a^{-1} mod group
    long long old_r = a, rr = group, old_s = 1, s = 0;
    while (rr != 0) {
      const long long qt = old_r / rr;
      std::tie(old_r, rr) = std::pair{rr, old_r - qt * rr};
      std::tie(old_s, s) = std::pair{s, old_s - qt * s};
    }
    inv_a = ((old_s % group) + group) % group;
  }
  return static_cast<int>(b * inv_a % group);
}

std::string FieldTable::to_string(FieldElem a, char var) const {
  auto c = coeffs(a);
  return poly_to_string(PolyZp(c.begin(), c.end()), var);
}

std::string poly_to_string(const PolyZp& coeffs, char var) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const int c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace quandle_lab
