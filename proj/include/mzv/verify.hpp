#pragma once

// Exhaustive checkers for the drop-1 / star identities and their numeric
// consequences, plus counterexample scanners for the two open conjectures.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "mzv/drop1.hpp"

namespace mzv {

enum class Status { Pass, Fail, Exception };

std::string to_string(Status s);

struct Failure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

/// One verification run. status == Pass iff failures is empty and nothing threw.
struct CheckReport {
  std::string check_name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t cases_total = 0;
  std::vector<Failure> failures;
  /// Warnings and labels: small-prime exceptions, conjecture findings, the
  /// message of an exception that aborted the run.
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;
  Status status = Status::Pass;

  nlohmann::ordered_json to_json() const;
  /// Header line "input,lhs,rhs" followed by one quoted row per failure.
  std::string failures_csv() const;
  /// One-line human summary.
  std::string summary() const;
};

struct VerifyOptions {
  unsigned threads = 1;
  std::size_t memo_cap = kDefaultMemoCap;
};

/// D(w1 tau(w2)) == w1 * w2 for all H^{2,3} word pairs with wt(w1) + wt(w2) <= max.
CheckReport check_main_theorem(int max_total_weight, const VerifyOptions& opts = {});

/// D(w) == w on H^{>=2}; D(w) == D(tau w) and D(D(w)) == D(w) on H^0; weights <= max.
CheckReport check_drop1_axioms(int max_weight, const VerifyOptions& opts = {});

/// D(zeta(2^{a-1},3,2^{c-1},1,2^b)-word) against its three-term expansion, for
/// 1 <= a <= a_max, 1 <= b <= b_max, 1 <= c <= c_max.
CheckReport check_hs_families(int a_max, int b_max, int c_max, const VerifyOptions& opts = {});

/// Mod-p reversal, shuffle and double-shuffle relations for H^{2,3} word
/// pairs, plus zeta_p(2^n) == 0 and the Hoffman-type instances. Failures at
/// primes p <= small_prime_bound (default: weight + 1 of the case) are noted
/// as small-prime exceptions instead of failures. Throws NotPrimeError.
CheckReport check_fmzv(int max_total_weight, std::span<const std::uint64_t> primes,
                       std::optional<std::uint64_t> small_prime_bound = std::nullopt,
                       const VerifyOptions& opts = {});

/// diamond_flat_p(k) == (-1)^l zeta_p(a_1+b_1, ..., a_s+b_s) for admissible k
/// of weight <= weight_max. Throws NotPrimeError.
CheckReport check_lemma41(int weight_max, std::span<const std::uint64_t> primes, const VerifyOptions& opts = {});

/// hoffman_diamond_instance(c, N) has lhs == rhs for 1 <= c <= c_max, 2 <= N <= n_max.
CheckReport check_hoffman_diamond(int c_max, std::uint64_t n_max, const VerifyOptions& opts = {});

/// The c = 1 cancellation identity F(c, A, B) = 0 over brackets [a; b; 1]
/// with r, s >= 1 and sum(a) + sum(b) <= max_ab_sum.
CheckReport check_cancellation(int max_ab_sum, const VerifyOptions& opts = {});

/// Fiber scan (D(w) == D(w') only for w' in {w, tau w}) and image scan
/// (D(w) in H^{2,3} only for w = w1 tau(w2)) over H^0 words of weight <= max.
/// A failure is a counterexample to an open conjecture.
CheckReport scan_conjectures(int max_weight, const VerifyOptions& opts = {});

/// True iff w = u v with u and tau(v) in H^{2,3}.
bool factors_as_w1_tau_w2(const Word& w);

/// Primes in [lo, hi].
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace mzv
