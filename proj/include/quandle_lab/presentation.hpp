#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quandle_lab/finite_field.hpp"
#include "quandle_lab/kernels.hpp"

namespace quandle_lab {

enum class Gen : unsigned char { X, Y };

struct Token {
  Gen gen = Gen::X;
  bool inverse = false;  // ▷^{-1}; ignored on the leading token

  friend bool operator==(const Token&, const Token&) = default;
};

/// Left-associated word g1 ▷^{±1} g2 ▷^{±1} ... over the generators x, y.
struct Word {
  std::vector<Token> tokens;

  std::string to_string() const;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Grammar: expr := operand (('*' | '/') operand)*, operand := 'x' | 'y' | '(' expr ')'.
/// Right operands must reduce to a single generator. Throws SyntaxError.
Word parse_word(std::string_view text);

/// Replaces every ▷^{-1} g by q-2 copies of ▷ g.
Word eliminate_inverses(const Word& w, int q);

/// α^{r+1} - α^{s+1} + α^s. BothZero when r = s = 0.
FieldElem mu(int r, int s, const FieldTable& field, FieldElem alpha);

/// Element of the canonical set {x, y, x y^r : 1 <= r <= q-2}.
struct CanonicalForm {
  enum class Tag : unsigned char { X, Y, XY };
  Tag tag = Tag::X;
  int r = 0;

  static CanonicalForm x() { return {Tag::X, 0}; }
  static CanonicalForm y() { return {Tag::Y, 0}; }
  static CanonicalForm xy(int r) { return {Tag::XY, r}; }

  /// "x", "y" or "x*y^r".
  std::string to_string() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

enum class ProductRule { Distributive, MuRule };

/// The presented quandle for a fixed (GF(q), α), with rewriting to canonical forms and the
/// evaluation map x ↦ 0, y ↦ 1 into the Alexander quandle x▷y = αx + (1-α)y.
class Presentation {
 public:
  /// NotPrimitive unless α generates GF(q)^*; InvalidParams for q < 3.
  Presentation(FieldTable field, FieldElem alpha);

  const FieldTable& field() const { return field_; }
  FieldElem alpha() const { return alpha_; }
  int q() const { return field_.order(); }

  /// log_α, ZeroArgument on 0.
  int log_alpha(FieldElem e) const;
  /// α^k for any integer k.
  FieldElem alpha_pow(long long k) const;
  /// log_α(1 - α^k) for 1 <= k <= q-2.
  int phi(int k) const { return phi_.at(static_cast<std::size_t>(k)); }

  /// All q canonical forms: x, y, xy^1, ..., xy^{q-2}.
  std::vector<CanonicalForm> canonical_set() const;
  FieldElem evaluate(const CanonicalForm& c) const;
  /// Direct evaluation of a word in the Alexander quandle.
  FieldElem evaluate(const Word& w) const;
  CanonicalForm from_element(FieldElem e) const;

  /// c ▷ g
  CanonicalForm act(const CanonicalForm& c, Gen g) const;
  /// c ▷ g ▷ ... ▷ g (k times, k reduced mod q-1 first)
  CanonicalForm act_power(CanonicalForm c, Gen g, long long k) const;

  /// Rewrites w into the canonical set. With `validate`, the result is checked against the
  /// field image and a mismatch throws RewriteMismatch.
  CanonicalForm normalize(const Word& w, bool validate = true) const;

  /// u ▷ v for canonical u, v. MuRule applies only when neither side is y and returns nullopt
  /// otherwise; Distributive always applies.
  std::optional<CanonicalForm> product(const CanonicalForm& u, const CanonicalForm& v, ProductRule rule) const;
  CanonicalForm product(const CanonicalForm& u, const CanonicalForm& v) const;

 private:
  FieldTable field_;
  FieldElem alpha_;
  std::vector<int> log_alpha_;  // indexed by element, -1 at 0
  std::vector<FieldElem> exp_alpha_;
  std::vector<int> phi_;  // phi_[k], k in [1, q-2]
};

struct PresentationReport {
  int q = 0;
  FieldElem alpha;
  std::size_t relations_checked = 0;
  std::vector<std::string> relation_failures;
  int image_size = 0;  // distinct field images of the canonical set
  std::size_t words_checked = 0;
  std::size_t word_mismatches = 0;
  std::vector<std::string> mismatch_examples;

  bool relations_ok() const { return relation_failures.empty(); }
  bool bijective() const { return image_size == q; }
  bool passed() const { return relations_ok() && bijective() && word_mismatches == 0; }
  /// Throws RelationViolation or NotBijective for a failed report.
  void require() const;
};

/// All words with a leading generator followed by up to max_len-1 tokens from {▷x, ▷y, ▷^{-1}x, ▷^{-1}y},
/// enumerated in length-then-lexicographic order.
std::vector<Word> enumerate_words(int max_len);

/// Checks the defining relations (both orderings of the generators), the bijection of the
/// canonical set onto GF(q), and normalize against direct evaluation for all words up to max_len.
PresentationReport verify_presentation_iso(const FieldTable& field, FieldElem alpha, int max_len = 6,
                                           Exec exec = Exec::Parallel);

/// Number of words in `words` whose normal form disagrees with direct evaluation.
std::size_t count_word_mismatches(const Presentation& pres, const std::vector<Word>& words, Exec exec);

/// β^{p^s} = α for some 0 <= s < n. NotPrimitive unless both are primitive.
bool prime_power_equivalent(const FieldTable& field, FieldElem alpha, FieldElem beta);

/// log_α(1-α^k) = log_β(1-β^k) for every 0 < k < q-1.
bool log_identity_check(const FieldTable& field, FieldElem alpha, FieldElem beta);

struct PrimClass {
  FieldElem representative;
  std::vector<FieldElem> members;  // representative, rep^p, rep^{p^2}, ...
  int rep_log = 0;                 // logs relative to the field's table generator
  std::vector<int> member_logs;
};

struct Classification {
  int q = 0;
  int p = 0;
  int n = 0;
  std::vector<PrimClass> classes;  // ascending rep_log

  std::size_t count() const { return classes.size(); }
};

/// Partition of the primitive elements of GF(q) into prime-power classes. InvalidParams for q <= 2;
/// VerificationFailure if a class does not have exactly n members.
Classification classify_cyclic(long long q);
Classification classify_cyclic(const FieldTable& field);

}  // namespace quandle_lab
