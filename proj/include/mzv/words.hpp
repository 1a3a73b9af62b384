#pragma once

// Words in the free monoid on {x, y} and the encodings used by the drop-1
// machinery: compositions (z-words), exponent tuples and bracket forms.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mzv {

// Y sorts before X so that, within one weight and depth, the word order
// coincides with lexicographic order on compositions.
enum class Letter : std::uint8_t { Y = 0, X = 1 };

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Letter form, e.g. "yxx". Throws ParseError on anything but 'x'/'y'.
  static Word from_letters(std::string_view text);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(Letter l, std::size_t count) { letters_.insert(letters_.end(), count, l); }
  void pop_back() { letters_.pop_back(); }
  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  /// Letter string; the empty word prints as "".
  std::string str() const;

  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t pos) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Graded order: length, then number of y's, then letters with y < x.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// (k_1, ..., k_r) standing for z_{k_1} ... z_{k_r}, z_k = y x^{k-1}.
struct Composition {
  std::vector<int> parts;

  std::size_t depth() const noexcept { return parts.size(); }
  bool admissible() const noexcept { return parts.empty() || parts.back() >= 2; }
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// (c_1, ..., c_{2t}) standing for y^{c_1} x^{c_2} ... y^{c_{2t-1}} x^{c_{2t}}.
struct ExponentTuple {
  std::vector<int> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;
};

/// [a_1..a_r; b_1..b_s; c], the tuple of z_2^{a_1-1} z_3 ... z_2^{c-1} y z_2^{b_1} ... y z_2^{b_s}.
struct BracketForm {
  std::vector<int> a;
  std::vector<int> b;
  int c = 1;

  /// t = sum(a) + sum(b) + c - 1; the expansion has 2t entries.
  int half_length() const noexcept;
  /// Prefix sums l_1..l_r of a.
  std::vector<int> a_prefix_sums() const;
  /// Prefix sums m_1..m_s of b.
  std::vector<int> b_prefix_sums() const;

  friend bool operator==(const BracketForm&, const BracketForm&) = default;
};

/// Run-length blocks ({1}^{a_i - 1}, b_i + 1) of an admissible composition,
/// the variable layout of the diamond-flat chain sum. Kept separate from
/// BracketForm on purpose; the two are never converted into each other.
struct RunBlocks {
  struct Block {
    int a = 1;
    int b = 1;
    friend bool operator==(const Block&, const Block&) = default;
  };
  std::vector<Block> blocks;

  friend bool operator==(const RunBlocks&, const RunBlocks&) = default;
};

struct Membership {
  bool in_h0 = false;
  bool in_h23 = false;
  bool in_hgeq2 = false;
  bool in_yh = false;
  friend bool operator==(const Membership&, const Membership&) = default;
};

// --- structural maps -------------------------------------------------------

Word z(int k);
Word tau(const Word& w);
Composition reverse(const Composition& k);
int weight(const Word& w) noexcept;
int weight(const Composition& k) noexcept;
int depth(const Composition& k) noexcept;
Membership membership(const Word& w);

bool in_yh(const Word& w) noexcept;
bool in_h0(const Word& w) noexcept;
bool in_hgeq2(const Word& w) noexcept;
bool in_h23(const Word& w) noexcept;

// --- conversions -----------------------------------------------------------
// Each throws DomainError when the source lies outside the target's domain.

Word to_word(const Composition& k);
Word to_word(const ExponentTuple& c);
Word to_word(const BracketForm& br);
Composition to_composition(const Word& w);
ExponentTuple to_exponent_tuple(const Word& w);
ExponentTuple to_exponent_tuple(const BracketForm& br);
BracketForm to_bracket_form(const ExponentTuple& c);
BracketForm to_bracket_form(const Word& w);
RunBlocks to_run_blocks(const Composition& k);
Composition to_composition(const RunBlocks& rb);

/// Indices i (1-based) with c_i == 1, as a sorted list.
std::vector<int> ones_positions(const ExponentTuple& c);
/// Indices i (1-based) with c_i > 1, as a sorted list.
std::vector<int> big_positions(const ExponentTuple& c);

// --- text ------------------------------------------------------------------

/// Letter form ("yxx") or composition form ("3,1,4"). Whitespace is ignored;
/// an empty (or all-blank) string and "()" denote the empty word.
std::variant<Word, Composition> parse_word(std::string_view text);
/// "[a1,..;b1,..;c]" with either list possibly empty.
BracketForm parse_bracket(std::string_view text);
/// Any of the three forms, converted to a word.
Word parse_any_word(std::string_view text);

std::string to_string(const Composition& k);
std::string to_string(const ExponentTuple& c);
std::string to_string(const BracketForm& br);
std::string to_string(const RunBlocks& rb);

// --- enumeration -----------------------------------------------------------

/// All compositions of `total` with every part in [min_part, max_part], in
/// lexicographic order.
std::vector<Composition> compositions(int total, int min_part = 1, int max_part = 0);
/// Words of H^{2,3} of exactly the given weight.
std::vector<Word> h23_words(int weight);
/// Words of H^0 of exactly the given weight (the empty word for weight 0).
std::vector<Word> h0_words(int weight);
/// Words of H^{>=2} of exactly the given weight.
std::vector<Word> hgeq2_words(int weight);

}  // namespace mzv

template <>
struct std::hash<mzv::Word> : mzv::WordHash {};
