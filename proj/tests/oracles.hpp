#pragma once

// Naive nested-loop evaluators, written straight from the defining sums and
// shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <functional>
#include <vector>

#include "mzv/numeric.hpp"

namespace mzv::oracle {

// Naive nested loops over 0 < n_1 < ... < n_r < N.
template <class T, class Term>
inline T nested_sum(std::size_t r, std::uint64_t N, Term term, T zero, T one) {
  T total = zero;
  std::vector<std::uint64_t> n(r);
  std::function<void(std::size_t, std::uint64_t, T)> rec = [&](std::size_t depth, std::uint64_t lo, T acc) {
    if (depth == r) {
      total += acc;
      return;
    }
    for (std::uint64_t v = lo; v < N; ++v) rec(depth + 1, v + 1, acc * term(depth, v));
  };
  rec(0, 1, one);
  return total;
}

inline Rational naive_exact(const Composition& k, std::uint64_t N) {
  return nested_sum<Rational>(
      k.parts.size(), N,
      [&](std::size_t j, std::uint64_t v) {
        Rational t(1);
        for (int e = 0; e < k.parts[j]; ++e) t /= static_cast<unsigned long>(v);
        return t;
      },
      Rational(0), Rational(1));
}

inline double naive_float(const Composition& k, std::uint64_t N) {
  return nested_sum<double>(
      k.parts.size(), N, [&](std::size_t j, std::uint64_t v) { return std::pow(static_cast<double>(v), -k.parts[j]); },
      0.0, 1.0);
}

// Brute-force inverse by search, independent of Fermat exponentiation.
inline std::uint64_t slow_inverse(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

inline std::uint64_t naive_modp(const Composition& k, std::uint64_t p) {
  struct Mod {
    std::uint64_t v, p;
    Mod& operator+=(const Mod& o) {
      v = (v + o.v) % p;
      return *this;
    }
    Mod operator*(const Mod& o) const { return {v * o.v % p, p}; }
  };
  return nested_sum<Mod>(
             k.parts.size(), p,
             [&](std::size_t j, std::uint64_t v) {
               Mod t{1, p};
               for (int e = 0; e < k.parts[j]; ++e) t = t * Mod{slow_inverse(v, p), p};
               return t;
             },
             Mod{0, p}, Mod{1 % p, p})
      .v;
}

// Chain loop for the diamond-flat sum, from its defining inequalities.
inline std::uint64_t naive_diamond(const Composition& k, std::uint64_t p) {
  const RunBlocks rb = to_run_blocks(k);
  struct Var {
    bool from_top;
    bool strict_before;
  };
  std::vector<Var> vars;
  for (std::size_t i = 0; i < rb.blocks.size(); ++i)
    for (int j = 0; j < rb.blocks[i].a + rb.blocks[i].b; ++j) vars.push_back({j < rb.blocks[i].a, j == 0});
  std::uint64_t total = 0;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec = [&](std::size_t d, std::uint64_t prev,
                                                                          std::uint64_t acc) {
    if (d == vars.size()) {
      total = (total + acc) % p;
      return;
    }
    const std::uint64_t lo = d == 0 ? 1 : (vars[d].strict_before ? prev + 1 : prev);
    for (std::uint64_t v = lo; v < p; ++v)
      rec(d + 1, v, acc * slow_inverse(vars[d].from_top ? p - v : v, p) % p);
  };
  rec(0, 0, 1);
  return total;
}

// The two displayed sums, transcribed literally.
inline Rational naive_hoffman_lhs(int c, std::uint64_t N) {
  const std::size_t r = static_cast<std::size_t>(c) + 2;
  auto exponent = [&](std::size_t j) { return j == 0 ? 3 : (j + 1 < r - 1 ? 2 : (j == r - 2 ? 1 : 2)); };
  Rational total = 0;
  std::vector<std::uint64_t> n(r);
  std::function<void(std::size_t, bool)> rec = [&](std::size_t d, bool weak_form) {
    if (d == r) {
      Rational t(1);
      for (std::size_t j = 0; j < r; ++j) {
        if (weak_form && j == r - 2) {
          t /= static_cast<unsigned long>(N - n[j]);
        } else {
          for (int e = 0; e < exponent(j); ++e) t /= static_cast<unsigned long>(n[j]);
        }
      }
      total += t;
      return;
    }
    std::uint64_t lo = d == 0 ? 1 : n[d - 1] + 1;
    if (weak_form && d == r - 1) lo = n[d - 1];
    for (std::uint64_t v = lo; v < N; ++v) {
      n[d] = v;
      rec(d + 1, weak_form);
    }
  };
  rec(0, false);
  rec(0, true);
  return total;
}

}  // namespace mzv::oracle
