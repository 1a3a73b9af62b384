#pragma once

// Exact linear combinations of words, and the products used on them.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "mzv/words.hpp"

namespace mzv {

using Rational = mpq_class;

/// Sparse Q-linear combination of words. Zero coefficients are never stored,
/// so two LinCombs are equal iff their term maps are equal. Terms iterate in
/// the graded word order (weight, depth, then composition lexicographic).
class LinComb {
 public:
  using Terms = std::map<Word, Rational>;

  LinComb() = default;
  explicit LinComb(Word w, Rational coeff = 1);

  static LinComb one() { return LinComb(Word{}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& coeff);
  void add_term(Word&& w, const Rational& coeff);

  LinComb& operator+=(const LinComb& rhs);
  LinComb& operator-=(const LinComb& rhs);
  LinComb& operator*=(const Rational& r);

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(LinComb a, const Rational& r) { return a *= r; }
  friend LinComb operator*(const Rational& r, LinComb a) { return a *= r; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// All coefficients have denominator 1.
  bool is_integral() const;
  bool all_nonnegative() const;
  /// True iff every word satisfies `pred`.
  bool all_words(const std::function<bool(const Word&)>& pred) const;

  /// "2·3,3 + 1·2,2,2"; the zero combination prints as "0", the empty word as
  /// "()", words outside Z + yH in letter form.
  std::string str() const;

 private:
  Terms terms_;
};

/// Term string used by LinComb::str for a single word.
std::string word_label(const Word& w);

LinComb add(const LinComb& p, const LinComb& q);
LinComb scale(const LinComb& p, const Rational& r);
/// Bilinear concatenation product.
LinComb concat(const LinComb& p, const LinComb& q);

/// Appends x^m to every word (z_j -> z_{j+m} on the last part). Rejects the
/// empty word when m >= 1.
LinComb append_x_power(const LinComb& p, int m);
/// Appends z_k to every word.
LinComb append_z(const LinComb& p, int k);

LinComb shuffle(const Word& u, const Word& v);
LinComb shuffle(const LinComb& p, const LinComb& q);

/// Memoizing evaluator of the star product on H^{2,3}. Not thread-safe; use
/// one instance per worker.
class StarProduct {
 public:
  /// Throws DomainError unless both words lie in H^{2,3}.
  LinComb operator()(const Word& w1, const Word& w2);
  LinComb operator()(const LinComb& p, const LinComb& q);

  std::size_t cache_size() const noexcept { return memo_.size(); }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Word, Word>& k) const noexcept {
      return WordHash{}(k.first) * 31 + WordHash{}(k.second);
    }
  };
  const LinComb& eval(const Word& w1, const Word& w2);

  std::unordered_map<std::pair<Word, Word>, LinComb, PairHash> memo_;
};

/// Star product through a thread-local StarProduct.
LinComb star(const Word& w1, const Word& w2);
LinComb star(const LinComb& p, const LinComb& q);

LinComb map_linear(const LinComb& p, const std::function<Word(const Word&)>& f);
LinComb tau(const LinComb& p);
/// Reverses the composition of every word; words must lie in Z + yH.
LinComb reverse(const LinComb& p);

}  // namespace mzv
