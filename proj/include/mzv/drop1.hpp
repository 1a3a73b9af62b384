#pragma once

// The drop-1 operator D : H^0 -> H^{>=2}, computed through its recursion on
// exponent tuples.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Sorted list of 1-based tuple positions.
using IndexSet = std::vector<int>;

/// EO: unions of pairs {i, i+1} inside S with i even.  OE: same with i odd.
/// NoEO / NoOE: subsets of S containing no such pair.
enum class FamilyKind { EO, OE, NoEO, NoOE };

/// Members of the family over `ground` (sorted). EO/OE come out in ascending
/// pair-subset bitmask order, NoEO/NoOE in ascending subset bitmask order.
std::vector<IndexSet> enumerate_family(FamilyKind kind, std::span<const int> ground);

struct SurgerySpec {
  IndexSet remove;     // A: positions holding a 1, deleted
  IndexSet decrement;  // B: positions holding an entry > 1, lowered by one
};

/// c_{(-A)} - delta_B. Throws DomainError if A touches an entry != 1, B touches
/// an entry == 1, the two overlap, or the result has odd length.
ExponentTuple tuple_surgery(const ExponentTuple& c, const SurgerySpec& spec);

inline constexpr std::size_t kDefaultMemoCap = std::size_t{1} << 22;

/// Memoized drop-1 evaluator. The memo is keyed by exact tuples and capped;
/// exceeding the cap throws CacheOverflow instead of evicting. Not
/// thread-safe; use one instance per worker.
class Drop1 {
 public:
  explicit Drop1(std::size_t memo_cap = kDefaultMemoCap) : memo_cap_(memo_cap) {}

  /// The recursion on tuples; throws DomainError on odd length or entries < 1.
  const LinComb& frak_d(const ExponentTuple& c);
  /// D(w) for a word of H^0; D(1) = 1.
  LinComb operator()(const Word& w);
  /// Linear extension; every word must lie in H^0.
  LinComb operator()(const LinComb& p);

  std::size_t cache_size() const noexcept { return memo_.size(); }
  std::size_t memo_cap() const noexcept { return memo_cap_; }

 private:
  const LinComb& eval(const std::vector<int>& c);

  std::size_t memo_cap_;
  std::map<std::vector<int>, LinComb> memo_;
};

// Convenience wrappers over a thread-local Drop1 with the default cap.
LinComb frak_d(const ExponentTuple& c);
LinComb drop1(const Word& w);
LinComb drop1_linear(const LinComb& p);

}  // namespace mzv
