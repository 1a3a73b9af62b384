#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mzv/error.hpp"
#include "mzv/numeric.hpp"
#include "oracles.hpp"

using namespace mzv;
using namespace mzv::oracle;

namespace {

Composition comp(std::initializer_list<int> parts) { return Composition{parts}; }

std::vector<Composition> small_compositions() {
  std::vector<Composition> out{comp({})};
  for (int a = 1; a <= 3; ++a) {
    out.push_back(comp({a}));
    for (int b = 1; b <= 3; ++b) {
      out.push_back(comp({a, b}));
      for (int c = 1; c <= 3; ++c) out.push_back(comp({a, b, c}));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("primality and modular helpers") {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) trial = false;
    REQUIRE(is_prime(n) == trial);
  }
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(18446744073709551555ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(inv_mod(14, 7), DomainError);
}

TEST_CASE("zeta_trunc_float examples") {
  const double pi = std::numbers::pi;
  const auto z2 = zeta_trunc_float(comp({2}), 1'000'000);
  CHECK(std::abs(z2.value - pi * pi / 6) < 1.1e-6);
  CHECK(z2.value < pi * pi / 6);
  const auto z22 = zeta_trunc_float(comp({2, 2}), 1'000'000);
  CHECK(std::abs(z22.value - std::pow(pi, 4) / 120) < 2e-5);
  CHECK(zeta_trunc_float(comp({2}), 1).value == 0.0);
  CHECK(zeta_trunc_float(comp({}), 10).value == 1.0);
  CHECK(std::isinf(zeta_trunc_float(comp({2, 1}), 10).tail_estimate));
  CHECK_THROWS_AS(zeta_trunc_float(comp({2}), 0), DomainError);
}

TEST_CASE("zeta_trunc_float tail estimate is the leading term of the true tail") {
  // For zeta(2) the tail is 1/N + O(1/N^2).
  const double pi = std::numbers::pi;
  for (std::uint64_t N : {10ULL, 100ULL, 1000ULL, 100000ULL}) {
    const auto v = zeta_trunc_float(comp({2}), N);
    const double tail = pi * pi / 6 - v.value;
    CHECK(std::abs(tail / v.tail_estimate - 1) <= 1.0 / static_cast<double>(N));
  }
}

TEST_CASE("zeta_trunc_exact examples") {
  CHECK(zeta_trunc_exact(comp({2}), 4) == Rational(49, 36));
  CHECK(zeta_trunc_exact(comp({1, 2}), 4) == Rational(5, 12));
  CHECK(zeta_trunc_exact(comp({}), 7) == 1);
  CHECK(zeta_trunc_exact(comp({3}), 1) == 0);
}

TEST_CASE("zeta_p_mod examples") {
  CHECK(zeta_p_mod(comp({2}), 5).residue == 0);
  CHECK(zeta_p_mod(comp({}), 7).residue == 1);
  CHECK(zeta_p_mod(comp({2, 2, 2}), 11).residue == 0);
  CHECK_THROWS_AS(zeta_p_mod(comp({2}), 9), NotPrimeError);
}

TEST_CASE("diamond_flat_p examples") {
  CHECK(diamond_flat_p(comp({2}), 5).residue == 0);
  CHECK(diamond_flat_p(comp({2}), 5).residue == zeta_p_mod(comp({2}), 5).residue);
  const auto z3 = zeta_p_mod(comp({3}), 7).residue;
  CHECK(diamond_flat_p(comp({1, 2}), 7).residue == (7 - z3) % 7);
  CHECK(diamond_flat_p(comp({2, 2}), 11) == zeta_p_mod(comp({2, 2}), 11));
  CHECK_THROWS_AS(diamond_flat_p(comp({2, 1}), 7), DomainError);
  CHECK_THROWS_AS(diamond_flat_p(comp({2}), 15), NotPrimeError);
}

TEST_CASE("hoffman_diamond_instance examples") {
  const auto i13 = hoffman_diamond_instance(1, 3);
  CHECK(i13.lhs == Rational(1, 4));
  CHECK(i13.rhs == Rational(1, 4));
  const auto i12 = hoffman_diamond_instance(1, 2);
  CHECK(i12.lhs == i12.rhs);
  const auto i220 = hoffman_diamond_instance(2, 20);
  CHECK(i220.lhs == i220.rhs);
}

TEST_CASE("hoffman_diamond_instance lhs matches the displayed sums") {
  for (int c = 1; c <= 3; ++c)
    for (std::uint64_t N = 2; N <= 10; ++N) REQUIRE(hoffman_diamond_instance(c, N).lhs == naive_hoffman_lhs(c, N));
}

TEST_CASE("DP evaluators equal naive nested loops") {
  const auto ks = small_compositions();
  for (const auto& k : ks) {
    for (std::uint64_t N : {1ULL, 2ULL, 5ULL, 17ULL, 60ULL}) {
      REQUIRE(zeta_trunc_exact(k, N) == naive_exact(k, N));
      const double f = zeta_trunc_float(k, N).value, g = naive_float(k, N);
      REQUIRE(std::abs(f - g) <= 1e-12 * std::max(1.0, std::abs(g)));
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL, 31ULL}) REQUIRE(zeta_p_mod(k, p).residue == naive_modp(k, p));
  }
}

TEST_CASE("diamond_flat_p equals the naive chain loop") {
  for (int wt = 2; wt <= 6; ++wt)
    for (const auto& k : compositions(wt)) {
      if (!k.admissible()) continue;
      const auto rb = to_run_blocks(k);
      int length = 0;
      for (const auto& blk : rb.blocks) length += blk.a + blk.b;
      if (length > 5) continue;
      for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        INFO("k = " << to_string(k) << ", p = " << p);
        REQUIRE(diamond_flat_p(k, p).residue == naive_diamond(k, p));
      }
    }
}

TEST_CASE("zeta_trunc_float is nondecreasing in N") {
  for (const auto& k : small_compositions()) {
    double prev = -1.0;
    for (std::uint64_t N = 1; N <= 200; N += 7) {
      const double v = zeta_trunc_float(k, N).value;
      REQUIRE(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("eval_lincomb") {
  LinComb p(to_word(comp({3, 3})), 2);
  p.add_term(to_word(comp({2, 2, 2})), 1);
  const auto r = std::get<ResidueValue>(eval_lincomb(p, ModPBackend{11}));
  CHECK(r.residue == (2 * zeta_p_mod(comp({3, 3}), 11).residue + zeta_p_mod(comp({2, 2, 2}), 11).residue) % 11);
  CHECK(std::get<double>(eval_lincomb(LinComb{}, FloatBackend{100})) == 0.0);
  CHECK(std::get<Rational>(eval_lincomb(LinComb{}, ExactBackend{100})) == 0);
  CHECK(std::get<ResidueValue>(eval_lincomb(LinComb{}, ModPBackend{7})).residue == 0);
  const double z2 = std::get<double>(eval_lincomb(LinComb(z(2)), FloatBackend{1'000'000}));
  CHECK(std::abs(z2 - std::numbers::pi * std::numbers::pi / 6) < 1.1e-6);

  LinComb half(z(2), Rational(1, 2));
  CHECK(std::get<Rational>(eval_lincomb(half, ExactBackend{4})) == Rational(49, 72));
  const auto hv = std::get<ResidueValue>(eval_lincomb(half, ModPBackend{7})).residue;
  CHECK(hv * 2 % 7 == zeta_p_mod(comp({2}), 7).residue);
  CHECK_THROWS_AS(eval_lincomb(LinComb(Word::from_letters("xy")), ExactBackend{4}), DomainError);
  CHECK_THROWS_AS(eval_lincomb(LinComb(z(2), Rational(1, 7)), ModPBackend{7}), DomainError);
}
