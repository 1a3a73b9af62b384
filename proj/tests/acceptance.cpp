// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "mzv/drop1.hpp"
#include "mzv/numeric.hpp"
#include "mzv/verify.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_report(const CheckReport& r, double limit_s = 0) {
  bool ok = r.status == Status::Pass;
  std::string detail = r.summary();
  if (limit_s > 0 && r.elapsed_ms > limit_s * 1000) {
    ok = false;
    detail += ", over the " + std::to_string(static_cast<int>(limit_s)) + " s limit";
  }
  return {ok, detail};
}

Word w_of(std::initializer_list<int> parts) { return to_word(Composition{parts}); }

Outcome micro_oracles() {
  LinComb d14(z(4));
  d14.add_term(w_of({2, 2}), -1);
  LinComb d312(w_of({3, 3}), 2);
  d312.add_term(w_of({2, 2, 2}), 1);
  const bool ok = drop1(z(2)) == LinComb(z(2)) && drop1(w_of({1, 2})) == LinComb(z(3)) &&
                  drop1(w_of({1, 3})) == d14 && drop1(w_of({3, 1, 2})) == d312;
  return {ok, "D(3,1,2) = " + drop1(w_of({3, 1, 2})).str() + ", D(1,3) = " + drop1(w_of({1, 3})).str()};
}

Outcome hoffman_basis_numeric() {
  const auto start = std::chrono::steady_clock::now();
  constexpr std::uint64_t N = 10'000'000;
  auto zf = [&](std::initializer_list<int> k) { return zeta_trunc_float(Composition{k}, N).value; };
  const double lhs = zf({3, 1, 4});
  const double rhs = -2048.0 / 4125 * zf({2, 2, 2, 2}) - 17.0 / 275 * zf({2, 3, 3}) + 2.0 / 275 * zf({3, 2, 3}) +
                     113.0 / 275 * zf({3, 3, 2});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double diff = std::abs(lhs - rhs);
  char buf[160];
  std::snprintf(buf, sizeof buf, "lhs %.12f, rhs %.12f, |diff| %.3e, %.2f s", lhs, rhs, diff, secs);
  return {diff <= 1e-3 && secs < 10, buf};
}

Outcome exact_diamond() {
  const auto hand = hoffman_diamond_instance(1, 3);
  CheckReport r = check_hoffman_diamond(4, 40);
  const bool hand_ok = hand.lhs == Rational(1, 4) && hand.rhs == Rational(1, 4);
  return {r.status == Status::Pass && hand_ok,
          r.summary() + "; c=1, N=3: " + hand.lhs.get_str() + " = " + hand.rhs.get_str()};
}

Outcome fmzv_suite() {
  const auto primes = primes_in_range(11, 199);
  const auto r = check_fmzv(8, primes);
  // The two vanishing families, evaluated directly; primes p <= weight+1 may
  // be exceptional.
  int instance_failures = 0;
  for (int c = 1; c <= 3; ++c) {
    const int wt = 2 * c + 4;
    Composition twos{std::vector<int>(static_cast<std::size_t>(c + 2), 2)};
    Composition k1{{3}}, k2{{3, 3}};
    for (int i = 0; i < c - 1; ++i) {
      k1.parts.push_back(2);
      k2.parts.push_back(2);
    }
    k1.parts.push_back(3);
    for (std::uint64_t p : primes) {
      if (p <= static_cast<std::uint64_t>(wt) + 1) continue;
      if (zeta_p_mod(twos, p).residue != 0) ++instance_failures;
      if ((zeta_p_mod(k1, p).residue + 2 * zeta_p_mod(k2, p).residue) % p != 0) ++instance_failures;
    }
  }
  return {r.status == Status::Pass && instance_failures == 0,
          r.summary() + "; direct vanishing-family failures: " + std::to_string(instance_failures)};
}

Outcome oracle_equivalence() {
  std::vector<Composition> ks{Composition{}};
  for (int a = 1; a <= 3; ++a) {
    ks.push_back(Composition{{a}});
    for (int b = 1; b <= 3; ++b) {
      ks.push_back(Composition{{a, b}});
      for (int c = 1; c <= 3; ++c) ks.push_back(Composition{{a, b, c}});
    }
  }
  std::uint64_t cases = 0;
  for (const auto& k : ks) {
    for (std::uint64_t N = 1; N <= 60; ++N) {
      ++cases;
      if (zeta_trunc_exact(k, N) != oracle::naive_exact(k, N))
        return {false, "exact mismatch at " + to_string(k) + ", N=" + std::to_string(N)};
      const double f = zeta_trunc_float(k, N).value, g = oracle::naive_float(k, N);
      if (std::abs(f - g) > 1e-12 * std::max(1.0, std::abs(g)))
        return {false, "float mismatch at " + to_string(k) + ", N=" + std::to_string(N)};
    }
    for (std::uint64_t p : primes_in_range(2, 31)) {
      ++cases;
      if (zeta_p_mod(k, p).residue != oracle::naive_modp(k, p))
        return {false, "mod-p mismatch at " + to_string(k) + ", p=" + std::to_string(p)};
    }
  }
  for (int wt = 2; wt <= 6; ++wt)
    for (const auto& k : compositions(wt)) {
      if (!k.admissible()) continue;
      int length = 0;
      for (const auto& blk : to_run_blocks(k).blocks) length += blk.a + blk.b;
      if (length > 5) continue;
      for (std::uint64_t p : primes_in_range(2, 13)) {
        ++cases;
        if (diamond_flat_p(k, p).residue != oracle::naive_diamond(k, p))
          return {false, "diamond mismatch at " + to_string(k) + ", p=" + std::to_string(p)};
      }
    }
  return {true, std::to_string(cases) + " cases"};
}

Outcome conjecture_scan() {
  const auto r = scan_conjectures(10);
  return from_report(r, 120);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 main theorem, total weight <= 12", [] { return from_report(check_main_theorem(12), 300); }},
      {"2 drop-1 axioms, weight <= 12", [] { return from_report(check_drop1_axioms(12), 120); }},
      {"3 hand-verified micro-oracles", micro_oracles},
      {"4 zeta(3,1,4) Hoffman-basis expansion at N = 1e7", hoffman_basis_numeric},
      {"5 exact diamond instance, c <= 4, N <= 40", exact_diamond},
      {"6 lemma41, weight <= 8, primes 5..97",
       [] { return from_report(check_lemma41(8, primes_in_range(5, 97)), 60); }},
      {"7 fmzv suite, weight <= 8, primes 11..199", fmzv_suite},
      {"8 oracle equivalence", oracle_equivalence},
      {"9 conjecture scans, weight <= 10", conjecture_scan},
      {"10 cancellation identity, sum(a)+sum(b) <= 5", [] { return from_report(check_cancellation(5)); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %s  (%s)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
