#include "mzv/drop1.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

#include "mzv/error.hpp"

namespace mzv {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxTupleLength = 63;

bool even(int i) { return i % 2 == 0; }

// Does the position mask contain some {i, i+1} with i of the given parity?
bool has_pair(Mask m, bool even_start) {
  // bit (i-1) stands for position i; parity of position i is opposite to the
  // parity of its bit index.
  const Mask starts = even_start ? 0xAAAAAAAAAAAAAAAAULL : 0x5555555555555555ULL;
  return (m & (m >> 1) & starts) != 0;
}

Mask to_mask(std::span<const int> positions) {
  Mask m = 0;
  for (int p : positions) m |= Mask{1} << (p - 1);
  return m;
}

IndexSet from_mask(Mask m) {
  IndexSet out;
  while (m) {
    const int bit = std::countr_zero(m);
    out.push_back(bit + 1);
    m &= m - 1;
  }
  return out;
}

// Pairs {i, i+1} inside S with i of the given parity, as masks.
std::vector<Mask> pair_masks(Mask s, bool even_start) {
  std::vector<Mask> pairs;
  for (int i = 1; i < 64; ++i) {
    if (even(i) != even_start) continue;
    const Mask pm = (Mask{1} << (i - 1)) | (Mask{1} << i);
    if ((s & pm) == pm) pairs.push_back(pm);
  }
  return pairs;
}

template <class F>
void for_each_pair_union(const std::vector<Mask>& pairs, F&& f) {
  for (Mask sel = 0; sel < (Mask{1} << pairs.size()); ++sel) {
    Mask a = 0;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if ((sel >> j) & 1) a |= pairs[j];
    f(a);
  }
}

// Subsets of S (given by its sorted positions) without a forbidden pair.
template <class F>
void for_each_pair_free_subset(const std::vector<int>& ground, bool even_start, F&& f) {
  for (Mask sel = 0; sel < (Mask{1} << ground.size()); ++sel) {
    Mask b = 0;
    for (std::size_t j = 0; j < ground.size(); ++j)
      if ((sel >> j) & 1) b |= Mask{1} << (ground[j] - 1);
    if (!has_pair(b, even_start)) f(b);
  }
}

void check_tuple(std::span<const int> c) {
  if (c.size() % 2 != 0)
    throw DomainError("exponent tuple must have even length, got " + std::to_string(c.size()));
  if (c.size() > kMaxTupleLength) throw DomainError("exponent tuple longer than 63 entries");
  for (int v : c)
    if (v < 1) throw DomainError("exponent tuple entries must be >= 1");
}

std::vector<int> surgery(std::span<const int> c, Mask remove, Mask decrement) {
  std::vector<int> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Mask bit = Mask{1} << i;
    if (remove & bit) continue;
    out.push_back(c[i] - ((decrement & bit) ? 1 : 0));
  }
  return out;
}

}  // namespace

std::vector<IndexSet> enumerate_family(FamilyKind kind, std::span<const int> ground) {
  for (int p : ground)
    if (p < 1 || p > 63) throw DomainError("family ground set positions must lie in [1, 63]");
  std::vector<IndexSet> out;
  const Mask s = to_mask(ground);
  switch (kind) {
    case FamilyKind::EO:
    case FamilyKind::OE:
      for_each_pair_union(pair_masks(s, kind == FamilyKind::EO), [&](Mask a) { out.push_back(from_mask(a)); });
      break;
    case FamilyKind::NoEO:
    case FamilyKind::NoOE: {
      std::vector<int> sorted(ground.begin(), ground.end());
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for_each_pair_free_subset(sorted, kind == FamilyKind::NoEO, [&](Mask b) { out.push_back(from_mask(b)); });
      break;
    }
  }
  return out;
}

ExponentTuple tuple_surgery(const ExponentTuple& c, const SurgerySpec& spec) {
  check_tuple(c.entries);
  const int n = static_cast<int>(c.size());
  Mask remove = 0, decrement = 0;
  for (int p : spec.remove) {
    if (p < 1 || p > n) throw DomainError("surgery: position " + std::to_string(p) + " out of range");
    if (c.entries[static_cast<std::size_t>(p - 1)] != 1)
      throw DomainError("surgery: removed position " + std::to_string(p) + " does not hold a 1");
    remove |= Mask{1} << (p - 1);
  }
  for (int p : spec.decrement) {
    if (p < 1 || p > n) throw DomainError("surgery: position " + std::to_string(p) + " out of range");
    if (c.entries[static_cast<std::size_t>(p - 1)] <= 1)
      throw DomainError("surgery: decremented position " + std::to_string(p) + " does not hold an entry > 1");
    decrement |= Mask{1} << (p - 1);
  }
  if (std::popcount(remove) % 2 != 0) throw DomainError("surgery: removing an odd number of positions");
  return ExponentTuple{surgery(c.entries, remove, decrement)};
}

const LinComb& Drop1::frak_d(const ExponentTuple& c) {
  check_tuple(c.entries);
  return eval(c.entries);
}

const LinComb& Drop1::eval(const std::vector<int>& c) {
  if (auto it = memo_.find(c); it != memo_.end()) return it->second;

  LinComb result;
  if (c.empty()) {
    result = LinComb::one();
  } else {
    std::vector<int> ones, big;
    for (std::size_t i = 0; i < c.size(); ++i) (c[i] == 1 ? ones : big).push_back(static_cast<int>(i) + 1);
    const Mask ones_mask = to_mask(ones);

    // Sums 1 and 2: A in P^eo(ones), B in P^{no eo}(big).
    const auto eo_pairs = pair_masks(ones_mask, true);
    for_each_pair_union(eo_pairs, [&](Mask a) {
      for_each_pair_free_subset(big, true, [&](Mask b) {
        const int na = std::popcount(a), nb = std::popcount(b);
        const int n = na + nb;
        if (n < 1) return;
        // Position 1 is never in an eo-pair, so the surgered tuple keeps it.
        assert((a & 1) == 0);
        const LinComb& sub = eval(surgery(c, a, b));
        const Rational sign = (nb - 1) % 2 == 0 ? 1 : -1;
        result += append_x_power(sub, n) * sign;
        if (n >= 2) result += append_z(sub, n) * sign;
      });
    });

    // Sum 3: A in P^oe(ones), B in P^{no oe}(big).
    const auto oe_pairs = pair_masks(ones_mask, false);
    for_each_pair_union(oe_pairs, [&](Mask a) {
      for_each_pair_free_subset(big, false, [&](Mask b) {
        const int nb = std::popcount(b);
        const int n = std::popcount(a) + nb;
        if (n < 2) return;
        const LinComb& sub = eval(surgery(c, a, b));
        const Rational sign = nb % 2 == 0 ? 1 : -1;
        result += append_z(sub, n) * sign;
      });
    });
  }

  if (memo_.size() >= memo_cap_)
    throw CacheOverflow("drop-1 memo cache exceeded its cap of " + std::to_string(memo_cap_) + " entries");
  return memo_.emplace(c, std::move(result)).first->second;
}

LinComb Drop1::operator()(const Word& w) { return frak_d(to_exponent_tuple(w)); }

LinComb Drop1::operator()(const LinComb& p) {
  LinComb out;
  for (const auto& [w, coeff] : p.terms()) out += (*this)(w) * coeff;
  return out;
}

namespace {

Drop1& thread_engine() {
  thread_local Drop1 engine;
  return engine;
}

}  // namespace

LinComb frak_d(const ExponentTuple& c) { return thread_engine().frak_d(c); }

LinComb drop1(const Word& w) { return thread_engine()(w); }

LinComb drop1_linear(const LinComb& p) { return thread_engine()(p); }

}  // namespace mzv
