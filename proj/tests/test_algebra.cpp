#include <random>

#include "doctest.h"
#include "mzv/algebra.hpp"
#include "mzv/error.hpp"

using namespace mzv;

namespace {

Word w_of(std::initializer_list<int> parts) { return to_word(Composition{parts}); }

LinComb lc(std::initializer_list<std::pair<std::initializer_list<int>, long>> terms) {
  LinComb out;
  for (const auto& [parts, c] : terms) out.add_term(w_of(parts), Rational(c));
  return out;
}

Rational coefficient_sum(const LinComb& p) {
  Rational s = 0;
  for (const auto& [w, c] : p.terms()) s += c;
  return s;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), bit(0, 1);
  Word w;
  for (int i = len(rng); i > 0; --i) w.push_back(bit(rng) ? Letter::X : Letter::Y);
  return w;
}

}  // namespace

TEST_CASE("add, scale, concat") {
  const LinComb yx(Word::from_letters("yx"), 2);
  CHECK((yx + scale(yx, -1)).is_zero());
  CHECK(concat(LinComb(z(2)), LinComb(z(3))) == LinComb(Word::from_letters("yxyxx")));
  const LinComb half = scale(LinComb(z(2)), Rational(1, 2));
  CHECK(half + half == LinComb(z(2)));
  CHECK_FALSE(half.is_integral());
  CHECK(concat(LinComb::one(), LinComb(z(5))) == LinComb(z(5)));
}

TEST_CASE("append primitives") {
  CHECK(append_x_power(LinComb(z(2)), 1) == LinComb(z(3)));
  CHECK(append_x_power(LinComb(z(2)), 0) == LinComb(z(2)));
  CHECK(append_z(LinComb(z(2)), 2) == LinComb(w_of({2, 2})));
  CHECK_THROWS_AS(append_x_power(LinComb::one(), 2), DomainError);
  CHECK(append_x_power(LinComb::one(), 0) == LinComb::one());
}

TEST_CASE("shuffle examples") {
  const Word yx = Word::from_letters("yx");
  LinComb expected;
  expected.add_term(Word::from_letters("yxyx"), 2);
  expected.add_term(Word::from_letters("yyxx"), 4);
  CHECK(shuffle(yx, yx) == expected);
  CHECK(shuffle(Word{}, z(3)) == LinComb(z(3)));
  LinComb two;
  two.add_term(Word::from_letters("yx"), 1);
  two.add_term(Word::from_letters("xy"), 1);
  CHECK(shuffle(Word::from_letters("y"), Word::from_letters("x")) == two);
}

TEST_CASE("shuffle coefficient sum is binomial, |u|+|v| <= 12") {
  for (int n = 0; n <= 12; ++n) {
    for (int lu = 0; lu <= n; ++lu) {
      // Coefficient sums do not depend on the letters beyond the lengths, but
      // a sweep of letter patterns guards the bookkeeping of repeated letters.
      const unsigned patterns_u = n <= 8 ? (1u << lu) : 2u;
      const unsigned patterns_v = n <= 8 ? (1u << (n - lu)) : 2u;
      for (unsigned mu = 0; mu < patterns_u; ++mu)
        for (unsigned mv = 0; mv < patterns_v; ++mv) {
          Word u, v;
          for (int i = 0; i < lu; ++i) u.push_back((mu >> (i % 32)) & 1 ? Letter::X : Letter::Y);
          for (int i = 0; i < n - lu; ++i) v.push_back((mv >> (i % 32)) & 1 ? Letter::X : Letter::Y);
          REQUIRE(coefficient_sum(shuffle(u, v)) == binomial(n, lu));
        }
    }
  }
}

TEST_CASE("shuffle is commutative and associative on random words") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const Word a = random_word(rng, 6), b = random_word(rng, 6), c = random_word(rng, 6);
    REQUIRE(shuffle(a, b) == shuffle(b, a));
    REQUIRE(shuffle(shuffle(LinComb(a), LinComb(b)), LinComb(c)) == shuffle(LinComb(a), shuffle(LinComb(b), LinComb(c))));
  }
}

TEST_CASE("star examples") {
  CHECK(star(z(3), z(3)) == lc({{{3, 3}, 2}, {{2, 2, 2}, 1}}));
  CHECK(star(z(2), z(2)) == LinComb(w_of({2, 2})));
  CHECK(star(w_of({2, 3}), z(3)) == lc({{{3, 2, 3}, 1}, {{2, 3, 3}, 1}, {{2, 2, 2, 2}, 1}}));
  CHECK(star(Word{}, w_of({3, 2})) == LinComb(w_of({3, 2})));
  CHECK_THROWS_AS(star(z(4), z(2)), DomainError);
  CHECK_THROWS_AS(star(z(2), w_of({1, 2})), DomainError);
}

TEST_CASE("star is commutative, wt <= 10 each") {
  StarProduct sp;
  std::vector<Word> words;
  for (int wt = 0; wt <= 10; ++wt)
    for (auto& w : h23_words(wt)) words.push_back(w);
  for (const auto& u : words)
    for (const auto& v : words) REQUIRE(sp(u, v) == sp(v, u));
}

TEST_CASE("star rule-2 consistency, wt <= 8") {
  StarProduct sp;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (const auto& u : h23_words(a))
        for (const auto& v : h23_words(b)) {
          const LinComb base = append_z(sp(u, v), 2);
          REQUIRE(sp(u + z(2), v) == base);
          REQUIRE(sp(u, v + z(2)) == base);
        }
}

TEST_CASE("star outputs are nonnegative integral H23 combinations of additive weight") {
  StarProduct sp;
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; a + b <= 12; ++b)
      for (const auto& u : h23_words(a))
        for (const auto& v : h23_words(b)) {
          const LinComb p = sp(u, v);
          REQUIRE(p.is_integral());
          REQUIRE(p.all_nonnegative());
          REQUIRE(p.all_words([&](const Word& w) { return in_h23(w) && weight(w) == a + b; }));
        }
}

TEST_CASE("map_linear") {
  LinComb p(z(3));
  p.add_term(z(2), 1);
  LinComb expected(w_of({1, 2}));
  expected.add_term(z(2), 1);
  CHECK(tau(p) == expected);
  CHECK(tau(LinComb{}).is_zero());
  CHECK(reverse(LinComb(w_of({3, 3}), 2)) == LinComb(w_of({3, 3}), 2));
  CHECK(reverse(LinComb(w_of({2, 3}))) == LinComb(w_of({3, 2})));
}

TEST_CASE("serialization") {
  CHECK(lc({{{3, 3}, 2}, {{2, 2, 2}, 1}}).str() == "2·3,3 + 1·2,2,2");
  CHECK(lc({{{4}, 1}, {{2, 2}, -1}}).str() == "1·4 − 1·2,2");
  CHECK(lc({{{2, 2}, -3}}).str() == "−3·2,2");
  CHECK(LinComb{}.str() == "0");
  CHECK(LinComb::one().str() == "1·()");
  CHECK(LinComb(z(2), Rational(-2048, 4125)).str() == "−2048/4125·2");
  CHECK(LinComb(Word::from_letters("xy")).str() == "1·xy");
}
