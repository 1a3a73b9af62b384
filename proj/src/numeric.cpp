#include "mzv/numeric.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mzv/error.hpp"

namespace mzv {

// --- modular arithmetic ----------------------------------------------------

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("no inverse of 0 modulo " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
}

void require_positive(std::uint64_t N) {
  if (N < 1) throw DomainError("truncation bound N must be >= 1");
}

void require_parts(const Composition& k) {
  for (int part : k.parts)
    if (part < 1) throw DomainError("composition parts must be >= 1");
}

// Element of Z/pZ, enough of a field for the chain-sum template.
struct Fp {
  std::uint64_t v;
  std::uint64_t p;
  Fp& operator+=(const Fp& o) {
    v += o.v;
    if (v >= p) v -= p;
    return *this;
  }
  friend Fp operator*(const Fp& a, const Fp& b) { return Fp{mul_mod(a.v, b.v, a.p), a.p}; }
};

enum class Bond { Strict, Weak };

// Sum over chains v_1 ? v_2 ? ... ? v_L of values in [1, weights[j].size()]
// of prod weights[j][v_j - 1], where the j-th '?' is '<' or '<=' per bonds[j].
template <class T>
T chain_sum(const std::vector<std::vector<T>>& weights, const std::vector<Bond>& bonds, const T& zero,
            const T& one) {
  if (weights.empty()) return one;
  std::vector<T> f = weights.front();
  for (std::size_t j = 1; j < weights.size(); ++j) {
    T running = zero;
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
      if (bonds[j - 1] == Bond::Weak) {
        running += f[idx];
        f[idx] = running * weights[j][idx];
      } else {
        T prev = f[idx];
        f[idx] = running * weights[j][idx];
        running += prev;
      }
    }
  }
  T total = zero;
  for (const T& v : f) total += v;
  return total;
}

std::vector<Rational> exact_power_weights(int k, std::uint64_t N) {
  std::vector<Rational> w;
  w.reserve(N - 1);
  for (std::uint64_t n = 1; n < N; ++n) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), n, static_cast<unsigned long>(k));
    w.emplace_back(mpz_class(1), den);
  }
  return w;
}

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double inv_power(std::uint64_t n, int k) {
  const double inv = 1.0 / static_cast<double>(n);
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= inv;
  return r;
}

}  // namespace

TruncatedValue zeta_trunc_float(const Composition& k, std::uint64_t N) {
  require_positive(N);
  require_parts(k);
  TruncatedValue out;
  out.N = N;
  const std::size_t r = k.parts.size();
  if (r == 0) {
    out.value = 1.0;
    return out;
  }
  const int kr = k.parts.back();
  if (kr == 1) {
    out.tail_estimate = std::numeric_limits<double>::infinity();
  } else {
    const double logn = 1.0 + std::log(static_cast<double>(N));
    out.tail_estimate = static_cast<double>(r) * std::pow(logn, static_cast<double>(r - 1)) /
                        ((kr - 1) * std::pow(static_cast<double>(N), kr - 1));
  }
  if (N == 1) return out;

  // f[n] = sum over chains of the first j parts ending at n.
  std::vector<double> f(N);
  for (std::uint64_t n = 1; n < N; ++n) f[n] = inv_power(n, k.parts[0]);
  for (std::size_t j = 1; j < r; ++j) {
    CompensatedSum running;
    for (std::uint64_t n = 1; n < N; ++n) {
      const double prev = f[n];
      f[n] = running.value() * inv_power(n, k.parts[j]);
      running.add(prev);
    }
  }
  CompensatedSum total;
  for (std::uint64_t n = 1; n < N; ++n) total.add(f[n]);
  out.value = total.value();
  return out;
}

Rational zeta_trunc_exact(const Composition& k, std::uint64_t N) {
  require_positive(N);
  require_parts(k);
  std::vector<std::vector<Rational>> weights;
  for (int part : k.parts) weights.push_back(exact_power_weights(part, N));
  const std::vector<Bond> bonds(k.parts.empty() ? 0 : k.parts.size() - 1, Bond::Strict);
  return chain_sum<Rational>(weights, bonds, Rational(0), Rational(1));
}

namespace {

std::vector<Fp> modp_power_weights(int k, const std::vector<std::uint64_t>& inverses, std::uint64_t p) {
  std::vector<Fp> w;
  w.reserve(p - 1);
  for (std::uint64_t n = 1; n < p; ++n) w.push_back(Fp{pow_mod(inverses[n], static_cast<std::uint64_t>(k), p), p});
  return w;
}

std::vector<std::uint64_t> inverse_table(std::uint64_t p) {
  std::vector<std::uint64_t> inv(p);
  for (std::uint64_t n = 1; n < p; ++n) inv[n] = inv_mod(n, p);
  return inv;
}

}  // namespace

ResidueValue zeta_p_mod(const Composition& k, std::uint64_t p) {
  require_prime(p);
  require_parts(k);
  if (k.parts.empty()) return ResidueValue{1 % p, p};
  const auto inv = inverse_table(p);
  std::vector<std::vector<Fp>> weights;
  for (int part : k.parts) weights.push_back(modp_power_weights(part, inv, p));
  const std::vector<Bond> bonds(k.parts.size() - 1, Bond::Strict);
  return ResidueValue{chain_sum<Fp>(weights, bonds, Fp{0, p}, Fp{1, p}).v, p};
}

ResidueValue diamond_flat_p(const Composition& k, std::uint64_t p) {
  require_prime(p);
  const RunBlocks rb = to_run_blocks(k);
  if (rb.blocks.empty()) return ResidueValue{1 % p, p};
  const auto inv = inverse_table(p);
  std::vector<Fp> from_top(p - 1), plain(p - 1);
  for (std::uint64_t n = 1; n < p; ++n) {
    from_top[n - 1] = Fp{inv[p - n], p};
    plain[n - 1] = Fp{inv[n], p};
  }
  std::vector<std::vector<Fp>> weights;
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i < rb.blocks.size(); ++i) {
    if (i > 0) bonds.push_back(Bond::Strict);
    const auto& blk = rb.blocks[i];
    for (int j = 0; j < blk.a + blk.b; ++j) {
      if (j > 0) bonds.push_back(Bond::Weak);
      weights.push_back(j < blk.a ? from_top : plain);
    }
  }
  return ResidueValue{chain_sum<Fp>(weights, bonds, Fp{0, p}, Fp{1, p}).v, p};
}

DiamondInstance hoffman_diamond_instance(int c, std::uint64_t N) {
  if (c < 1) throw DomainError("hoffman_diamond_instance needs c >= 1");
  if (N < 2) throw DomainError("hoffman_diamond_instance needs N >= 2");
  Composition strict_chain{{3}};
  strict_chain.parts.insert(strict_chain.parts.end(), static_cast<std::size_t>(c - 1), 2);
  strict_chain.parts.push_back(1);
  strict_chain.parts.push_back(2);

  // n_1^3 n_2^2 ... n_c^2 (N - n_{c+1}) n_{c+2}^2 with n_{c+1} <= n_{c+2}.
  std::vector<std::vector<Rational>> weights;
  weights.push_back(exact_power_weights(3, N));
  for (int i = 1; i < c; ++i) weights.push_back(exact_power_weights(2, N));
  std::vector<Rational> reflected;
  for (std::uint64_t n = 1; n < N; ++n) reflected.emplace_back(mpz_class(1), mpz_class(static_cast<unsigned long>(N - n)));
  weights.push_back(std::move(reflected));
  weights.push_back(exact_power_weights(2, N));
  std::vector<Bond> bonds(static_cast<std::size_t>(c), Bond::Strict);
  bonds.push_back(Bond::Weak);

  DiamondInstance out;
  out.lhs = zeta_trunc_exact(strict_chain, N) + chain_sum<Rational>(weights, bonds, Rational(0), Rational(1));

  Composition twos{std::vector<int>(static_cast<std::size_t>(c + 2), 2)};
  Composition threes{{3, 3}};
  threes.parts.insert(threes.parts.end(), static_cast<std::size_t>(c - 1), 2);
  out.rhs = zeta_trunc_exact(twos, N) + 2 * zeta_trunc_exact(threes, N);
  return out;
}

namespace {

std::uint64_t rational_mod(const Rational& q, std::uint64_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw DomainError("coefficient denominator divisible by " + std::to_string(p));
  return mul_mod(num.get_ui(), inv_mod(den.get_ui(), p), p);
}

}  // namespace

EvalResult eval_lincomb(const LinComb& lc, const Backend& backend) {
  return std::visit(
      [&](const auto& be) -> EvalResult {
        using B = std::decay_t<decltype(be)>;
        if constexpr (std::is_same_v<B, FloatBackend>) {
          CompensatedSum acc;
          for (const auto& [w, c] : lc.terms()) acc.add(c.get_d() * zeta_trunc_float(to_composition(w), be.N).value);
          return acc.value();
        } else if constexpr (std::is_same_v<B, ExactBackend>) {
          Rational acc = 0;
          for (const auto& [w, c] : lc.terms()) acc += c * zeta_trunc_exact(to_composition(w), be.N);
          return acc;
        } else {
          require_prime(be.p);
          std::uint64_t acc = 0;
          for (const auto& [w, c] : lc.terms()) {
            const auto v = zeta_p_mod(to_composition(w), be.p).residue;
            acc = (acc + mul_mod(rational_mod(c, be.p), v, be.p)) % be.p;
          }
          return ResidueValue{acc, be.p};
        }
      },
      backend);
}

}  // namespace mzv
