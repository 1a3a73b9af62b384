#pragma once

// Truncated multiple zeta values (floating point and exact), their mod-p
// analogues, and the diamond-flat chain sums.

#include <cstdint>
#include <utility>
#include <variant>

#include "mzv/algebra.hpp"
#include "mzv/words.hpp"

namespace mzv {

struct TruncatedValue {
  double value = 0.0;
  /// Heuristic size of the omitted tail, r (1 + ln N)^{r-1} / ((k_r - 1) N^{k_r - 1});
  /// +inf when k_r == 1, 0 for the empty composition. Not a rigorous bound.
  double tail_estimate = 0.0;
  std::uint64_t N = 1;
};

struct ResidueValue {
  std::uint64_t residue = 0;
  std::uint64_t p = 2;
  friend bool operator==(const ResidueValue&, const ResidueValue&) = default;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse by Fermat's little theorem; p prime, a not divisible by p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// sum over 0 < n_1 < ... < n_r < N of prod n_i^{-k_i}, compensated summation.
TruncatedValue zeta_trunc_float(const Composition& k, std::uint64_t N);
/// Same sum as an exact rational.
Rational zeta_trunc_exact(const Composition& k, std::uint64_t N);
/// zeta_p(k) mod p. Throws NotPrimeError.
ResidueValue zeta_p_mod(const Composition& k, std::uint64_t p);

/// Diamond-flat chain sum mod p of an admissible composition
/// ({1}^{a_1-1}, b_1+1, ..., {1}^{a_s-1}, b_s+1):
///   sum prod_i 1/((p - n_{i,1}) ... (p - n_{i,a_i})) * 1/(m_{i,1} ... m_{i,b_i})
/// over 0 < n_{i,1} <= ... <= n_{i,a_i} <= m_{i,1} <= ... <= m_{i,b_i} < p with
/// m_{i,b_i} < n_{i+1,1}.
ResidueValue diamond_flat_p(const Composition& k, std::uint64_t p);

/// The N-truncated diamond form of the (3, {2}^{c-1}, 1, 2) identity, both
/// sides as exact rationals.
struct DiamondInstance {
  Rational lhs;
  Rational rhs;
};
DiamondInstance hoffman_diamond_instance(int c, std::uint64_t N);

struct FloatBackend {
  std::uint64_t N;
};
struct ExactBackend {
  std::uint64_t N;
};
struct ModPBackend {
  std::uint64_t p;
};
using Backend = std::variant<FloatBackend, ExactBackend, ModPBackend>;
/// double, exact rational, or residue mod p, matching the backend.
using EvalResult = std::variant<double, Rational, ResidueValue>;

/// Coefficient-weighted sum of per-word values. Words must lie in Z + yH.
/// For the mod-p backend coefficient denominators must be prime to p.
EvalResult eval_lincomb(const LinComb& p, const Backend& backend);

}  // namespace mzv
