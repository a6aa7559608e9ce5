#include "quandle_lab/presentation.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <set>

#include "quandle_lab/error.hpp"

namespace quandle_lab {

namespace {

char gen_char(Gen g) { return g == Gen::X ? 'x' : 'y'; }

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }

  Word expr() {
    Word w = operand();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '*' && text_[pos_] != '/')) return w;
      const bool inverse = text_[pos_] == '/';
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Word rhs = operand();
      if (rhs.tokens.size() != 1) throw SyntaxError(at, "right operand must be a single generator");
      w.tokens.push_back({rhs.tokens.front().gen, inverse});
    }
  }

  Word operand() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected operand");
    const char c = text_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return Word{{Token{c == 'x' ? Gen::X : Gen::Y, false}}};
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Word w = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw SyntaxError(pos_, "missing ')' for '(' at " + std::to_string(open));
      ++pos_;
      return w;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

long long mod(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

}  // namespace

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += tokens[i].inverse ? '/' : '*';
    out += gen_char(tokens[i].gen);
  }
  return out;
}

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Word eliminate_inverses(const Word& w, int q) {
  Word out;
  for (std::size_t i = 0; i < w.tokens.size(); ++i) {
    const Token& t = w.tokens[i];
    if (i == 0) {
      out.tokens.push_back({t.gen, false});
    } else if (t.inverse) {
      for (int j = 0; j < q - 2; ++j) out.tokens.push_back({t.gen, false});
    } else {
      out.tokens.push_back(t);
    }
  }
  return out;
}

FieldElem mu(int r, int s, const FieldTable& field, FieldElem alpha) {
  if (r == 0 && s == 0) throw Error(ErrorCode::BothZero, "mu needs r + s > 0");
  const FieldElem a = field.sub(field.pow(alpha, r + 1), field.pow(alpha, s + 1));
  return field.add(a, field.pow(alpha, s));
}

std::string CanonicalForm::to_string() const {
  switch (tag) {
    case Tag::X:
      return "x";
    case Tag::Y:
      return "y";
    case Tag::XY:
      return "x*y^" + std::to_string(r);
  }
  return "?";
}

Presentation::Presentation(FieldTable field, FieldElem alpha) : field_(std::move(field)), alpha_(alpha) {
  const int q = field_.order();
  if (q < 3) throw Error(ErrorCode::InvalidParams, "presentation needs q >= 3");
  if (!field_.contains(alpha) || !field_.is_primitive(alpha)) {
    throw Error(ErrorCode::NotPrimitive, "alpha is not primitive in GF(" + std::to_string(q) + ")");
  }
  exp_alpha_.resize(q - 1);
  log_alpha_.assign(q, -1);
  FieldElem e = field_.one();
  for (int k = 0; k < q - 1; ++k) {
    exp_alpha_[k] = e;
    log_alpha_[e.index] = k;
    e = field_.mul(e, alpha_);
  }
  phi_.assign(q - 1, 0);
  for (int k = 1; k <= q - 2; ++k) phi_[k] = log_alpha(field_.sub(field_.one(), exp_alpha_[k]));
}

int Presentation::log_alpha(FieldElem e) const {
  if (e == field_.zero()) throw Error(ErrorCode::ZeroArgument, "log of zero");
  return log_alpha_[e.index];
}

FieldElem Presentation::alpha_pow(long long k) const { return exp_alpha_[mod(k, q() - 1)]; }

std::vector<CanonicalForm> Presentation::canonical_set() const {
  std::vector<CanonicalForm> out{CanonicalForm::x(), CanonicalForm::y()};
  for (int r = 1; r <= q() - 2; ++r) out.push_back(CanonicalForm::xy(r));
  return out;
}

FieldElem Presentation::evaluate(const CanonicalForm& c) const {
  switch (c.tag) {
    case CanonicalForm::Tag::X:
      return field_.zero();
    case CanonicalForm::Tag::Y:
      return field_.one();
    case CanonicalForm::Tag::XY:
      return field_.sub(field_.one(), alpha_pow(c.r));
  }
  return field_.zero();
}

FieldElem Presentation::evaluate(const Word& w) const {
  if (w.tokens.empty()) throw Error(ErrorCode::InvalidParams, "empty word");
  auto value = [&](Gen g) { return g == Gen::X ? field_.zero() : field_.one(); };
  const FieldElem one_minus = field_.sub(field_.one(), alpha_);
  FieldElem a = value(w.tokens.front().gen);
  for (std::size_t i = 1; i < w.tokens.size(); ++i) {
    const FieldElem b = value(w.tokens[i].gen);
    if (w.tokens[i].inverse) {
      a = field_.div(field_.sub(a, field_.mul(one_minus, b)), alpha_);
    } else {
      a = field_.add(field_.mul(alpha_, a), field_.mul(one_minus, b));
    }
  }
  return a;
}

CanonicalForm Presentation::from_element(FieldElem e) const {
  if (e == field_.zero()) return CanonicalForm::x();
  if (e == field_.one()) return CanonicalForm::y();
  return CanonicalForm::xy(log_alpha(field_.sub(field_.one(), e)));
}

CanonicalForm Presentation::act(const CanonicalForm& c, Gen g) const {
  const int order = q() - 1;
  switch (c.tag) {
    case CanonicalForm::Tag::X:
      return g == Gen::X ? c : CanonicalForm::xy(1);
    case CanonicalForm::Tag::Y:
      // y x = x y^{phi(1)}
      return g == Gen::Y ? c : CanonicalForm::xy(phi(1));
    case CanonicalForm::Tag::XY:
      if (g == Gen::Y) return c.r + 1 == order ? CanonicalForm::x() : CanonicalForm::xy(c.r + 1);
      {
        // x y^r x = y x^k with k = phi(r) + 1, then y x^k = x y^{phi(k)}
        const int k = (phi(c.r) + 1) % order;
        return k == 0 ? CanonicalForm::y() : CanonicalForm::xy(phi(k));
      }
  }
  return c;
}

CanonicalForm Presentation::act_power(CanonicalForm c, Gen g, long long k) const {
  const long long steps = mod(k, q() - 1);
  for (long long i = 0; i < steps; ++i) c = act(c, g);
  return c;
}

CanonicalForm Presentation::normalize(const Word& w, bool validate) const {
  if (w.tokens.empty()) throw Error(ErrorCode::InvalidParams, "empty word");
  CanonicalForm c = w.tokens.front().gen == Gen::X ? CanonicalForm::x() : CanonicalForm::y();
  const long long inverse_weight = q() - 2;
  std::size_t i = 1;
  while (i < w.tokens.size()) {
    const Gen g = w.tokens[i].gen;
    long long exponent = 0;
    for (; i < w.tokens.size() && w.tokens[i].gen == g; ++i) exponent += w.tokens[i].inverse ? inverse_weight : 1;
    c = act_power(c, g, exponent);
  }
  if (validate && evaluate(c) != evaluate(w)) {
    throw Error(ErrorCode::RewriteMismatch, w.to_string() + " rewrote to " + c.to_string() +
                                                " but the field images differ");
  }
  return c;
}

std::optional<CanonicalForm> Presentation::product(const CanonicalForm& u, const CanonicalForm& v,
                                                   ProductRule rule) const {
  if (rule == ProductRule::MuRule) {
    if (u.tag == CanonicalForm::Tag::Y || v.tag == CanonicalForm::Tag::Y) return std::nullopt;
    const int r = u.tag == CanonicalForm::Tag::X ? 0 : u.r;
    const int s = v.tag == CanonicalForm::Tag::X ? 0 : v.r;
    if (r == 0 && s == 0) return CanonicalForm::x();
    const FieldElem m = mu(r, s, field_, alpha_);
    if (m == field_.zero()) return CanonicalForm::y();
    const int l = log_alpha(m);
    return l == 0 ? CanonicalForm::x() : CanonicalForm::xy(l);
  }
  switch (v.tag) {
    case CanonicalForm::Tag::X:
      return act(u, Gen::X);
    case CanonicalForm::Tag::Y:
      return act(u, Gen::Y);
    case CanonicalForm::Tag::XY: {
      // u ▷ (w ▷ y) = ((u ▷^{-1} y) ▷ w) ▷ y
      const CanonicalForm w = v.r == 1 ? CanonicalForm::x() : CanonicalForm::xy(v.r - 1);
      const CanonicalForm back = act_power(u, Gen::Y, q() - 2);
      return act(*product(back, w, ProductRule::Distributive), Gen::Y);
    }
  }
  return std::nullopt;
}

CanonicalForm Presentation::product(const CanonicalForm& u, const CanonicalForm& v) const {
  return *product(u, v, ProductRule::Distributive);
}

void PresentationReport::require() const {
  if (!relations_ok()) throw Error(ErrorCode::RelationViolation, relation_failures.front());
  if (!bijective()) {
    throw Error(ErrorCode::NotBijective, "canonical set has " + std::to_string(image_size) + " images, expected " +
                                             std::to_string(q));
  }
  if (word_mismatches > 0) {
    throw Error(ErrorCode::RewriteMismatch, std::to_string(word_mismatches) + " words disagree, first: " +
                                                mismatch_examples.front());
  }
}

std::vector<Word> enumerate_words(int max_len) {
  std::vector<Word> out;
  static constexpr std::array<Token, 4> kTail{Token{Gen::X, false}, Token{Gen::Y, false}, Token{Gen::X, true},
                                              Token{Gen::Y, true}};
  for (int len = 1; len <= max_len; ++len) {
    for (Gen lead : {Gen::X, Gen::Y}) {
      std::vector<int> digits(len - 1, 0);
      for (;;) {
        Word w;
        w.tokens.push_back({lead, false});
        for (int d : digits) w.tokens.push_back(kTail[d]);
        out.push_back(std::move(w));
        int pos = len - 2;
        while (pos >= 0 && ++digits[pos] == 4) digits[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
  return out;
}

std::size_t count_word_mismatches(const Presentation& pres, const std::vector<Word>& words, Exec exec) {
  const long count = static_cast<long>(words.size());
  auto bad = [&](long i) { return pres.evaluate(pres.normalize(words[i], false)) != pres.evaluate(words[i]); };
  std::size_t mismatches = 0;
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) mismatches += bad(i) ? 1 : 0;
    return mismatches;
  }
#pragma omp parallel for schedule(static) reduction(+ : mismatches)
  for (long i = 0; i < count; ++i) mismatches += bad(i) ? 1 : 0;
  return mismatches;
}

PresentationReport verify_presentation_iso(const FieldTable& field, FieldElem alpha, int max_len, Exec exec) {
  const Presentation pres(field, alpha);
  const int q = field.order();
  PresentationReport report;
  report.q = q;
  report.alpha = alpha;

  // y ▷^k applied to v in the Alexander quandle: α^k v + (1 - α^k) b
  auto power = [&](FieldElem v, FieldElem b, long long k) {
    const FieldElem ak = pres.alpha_pow(k);
    return field.add(field.mul(ak, v), field.mul(field.sub(field.one(), ak), b));
  };
  auto word_of = [](Gen a, Gen b, int k) {
    Word w{{Token{a, false}}};
    for (int i = 0; i < k; ++i) w.tokens.push_back({b, false});
    return w;
  };
  auto fail = [&](const std::string& what) { report.relation_failures.push_back(what); };

  for (const auto& [ga, gb] : {std::pair{Gen::X, Gen::Y}, std::pair{Gen::Y, Gen::X}}) {
    const FieldElem a = ga == Gen::X ? field.zero() : field.one();
    const FieldElem b = gb == Gen::X ? field.zero() : field.one();
    const std::string an(1, gen_char(ga));
    const std::string bn(1, gen_char(gb));

    ++report.relations_checked;
    if (power(a, b, q - 1) != a) fail(an + bn + "^(q-1) = " + an);
    if (pres.normalize(word_of(ga, gb, q - 1), false) != pres.normalize(word_of(ga, gb, 0), false)) {
      fail("rewriting of " + an + bn + "^(q-1)");
    }

    for (int k = 1; k <= q - 2; ++k) {
      ++report.relations_checked;
      const int l = pres.phi(k);
      if (power(a, b, k) != power(b, a, l)) fail(an + bn + "^" + std::to_string(k) + " = " + bn + an + "^" + std::to_string(l));
      if (pres.normalize(word_of(ga, gb, k), false) != pres.normalize(word_of(gb, ga, l), false)) {
        fail("rewriting of " + an + bn + "^" + std::to_string(k));
      }

      // a b^k a = b a^{(phi(k) + 1) mod (q-1)}
      ++report.relations_checked;
      Word lhs = word_of(ga, gb, k);
      lhs.tokens.push_back({ga, false});
      const int e = (l + 1) % (q - 1);
      if (pres.evaluate(lhs) != power(b, a, e)) fail(an + bn + "^" + std::to_string(k) + an + " product rule");
      if (pres.normalize(lhs, false) != pres.normalize(word_of(gb, ga, e), false)) {
        fail("rewriting of " + an + bn + "^" + std::to_string(k) + an);
      }
    }

    for (int r = 0; r <= q - 2; ++r) {
      for (int s = 0; s <= q - 2; ++s) {
        if (r + s == 0) continue;
        ++report.relations_checked;
        const FieldElem m = mu(r, s, field, alpha);
        const FieldElem lhs = field.add(field.mul(alpha, power(a, b, r)),
                                        field.mul(field.sub(field.one(), alpha), power(a, b, s)));
        const FieldElem rhs = m == field.zero() ? b : power(a, b, pres.log_alpha(m));
        if (lhs != rhs) fail("(" + an + bn + "^" + std::to_string(r) + ")(" + an + bn + "^" + std::to_string(s) + ") mu rule");
      }
    }
  }

  std::set<std::uint32_t> images;
  for (const auto& c : pres.canonical_set()) {
    const FieldElem e = pres.evaluate(c);
    images.insert(e.index);
    if (pres.from_element(e) != c) fail("evaluation is not inverted on " + c.to_string());
  }
  report.image_size = static_cast<int>(images.size());

  const std::vector<Word> words = enumerate_words(max_len);
  report.words_checked = words.size();
  report.word_mismatches = count_word_mismatches(pres, words, exec);
  if (report.word_mismatches > 0) {
    for (const auto& w : words) {
      if (report.mismatch_examples.size() >= 5) break;
      if (pres.evaluate(pres.normalize(w, false)) != pres.evaluate(w)) report.mismatch_examples.push_back(w.to_string());
    }
  }
  return report;
}

bool prime_power_equivalent(const FieldTable& field, FieldElem alpha, FieldElem beta) {
  for (FieldElem e : {alpha, beta}) {
    if (!field.contains(e) || !field.is_primitive(e)) {
      throw Error(ErrorCode::NotPrimitive, field.to_string(e) + " is not primitive");
    }
  }
  FieldElem b = beta;
  for (int s = 0; s < field.degree(); ++s) {
    if (b == alpha) return true;
    b = field.pow(b, field.characteristic());
  }
  return false;
}

bool log_identity_check(const FieldTable& field, FieldElem alpha, FieldElem beta) {
  const int q = field.order();
  for (int k = 1; k < q - 1; ++k) {
    const FieldElem ua = field.sub(field.one(), field.pow(alpha, k));
    const FieldElem ub = field.sub(field.one(), field.pow(beta, k));
    if (field.discrete_log(alpha, ua) != field.discrete_log(beta, ub)) return false;
  }
  return true;
}

Classification classify_cyclic(long long q) { return classify_cyclic(FieldTable::of_order(q)); }

Classification classify_cyclic(const FieldTable& field) {
  const int q = field.order();
  if (q <= 2) throw Error(ErrorCode::InvalidParams, "cyclic quandles need q > 2");
  const int p = field.characteristic();
  const int n = field.degree();
  const std::vector<FieldElem> prims = field.primitive_elements();

  // smallest log in each Frobenius orbit
  const long count = static_cast<long>(prims.size());
  std::vector<int> rep_log(count);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    int best = INT_MAX;
    FieldElem e = prims[i];
    for (int s = 0; s < n; ++s) {
      best = std::min(best, field.log(e));
      e = field.pow(e, p);
    }
    rep_log[i] = best;
  }

  Classification out;
  out.q = q;
  out.p = p;
  out.n = n;
  std::map<int, std::size_t> sizes;
  for (int r : rep_log) ++sizes[r];
  for (const auto& [r, size] : sizes) {
    PrimClass cls;
    cls.representative = field.exp(r);
    cls.rep_log = r;
    FieldElem e = cls.representative;
    for (int s = 0; s < n; ++s) {
      if (std::find(cls.members.begin(), cls.members.end(), e) != cls.members.end()) break;
      cls.members.push_back(e);
      cls.member_logs.push_back(field.log(e));
      e = field.pow(e, p);
    }
    if (cls.members.size() != static_cast<std::size_t>(n) || size != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::VerificationFailure,
                  "class of " + field.to_string(cls.representative) + " has " + std::to_string(cls.members.size()) +
                      " members, expected " + std::to_string(n));
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace quandle_lab
