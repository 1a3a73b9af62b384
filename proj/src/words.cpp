#include "mzv/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mzv/error.hpp"

namespace mzv {

Word Word::from_letters(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'x': letters.push_back(Letter::X); break;
      case 'y': letters.push_back(Letter::Y); break;
      default: throw ParseError("expected 'x' or 'y'", i);
    }
  }
  return Word(std::move(letters));
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l == Letter::X ? 'x' : 'y');
  return s;
}

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::suffix_from(std::size_t pos) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos), letters_.end()));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto cmp = a.size() <=> b.size(); cmp != 0) return cmp;
  auto ys = [](const Word& w) { return std::count(w.letters_.begin(), w.letters_.end(), Letter::Y); };
  if (auto cmp = ys(a) <=> ys(b); cmp != 0) return cmp;
  return a.letters_ <=> b.letters_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over letters, length mixed in.
  std::size_t h = 1469598103934665603ULL ^ w.size();
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(l) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

// --- structural maps -------------------------------------------------------

Word z(int k) {
  if (k < 1) throw DomainError("z_k requires k >= 1, got " + std::to_string(k));
  Word w;
  w.push_back(Letter::Y);
  w.append(Letter::X, static_cast<std::size_t>(k - 1));
  return w;
}

Word tau(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(*it == Letter::X ? Letter::Y : Letter::X);
  return Word(std::move(out));
}

Composition reverse(const Composition& k) {
  return Composition{std::vector<int>(k.parts.rbegin(), k.parts.rend())};
}

int weight(const Word& w) noexcept { return static_cast<int>(w.size()); }

int weight(const Composition& k) noexcept { return std::accumulate(k.parts.begin(), k.parts.end(), 0); }

int depth(const Composition& k) noexcept { return static_cast<int>(k.parts.size()); }

bool in_yh(const Word& w) noexcept { return w.empty() || w.front() == Letter::Y; }

bool in_h0(const Word& w) noexcept {
  return w.empty() || (w.front() == Letter::Y && w.back() == Letter::X);
}

namespace {

// Part sizes of a word in yH, or false if the word is not in yH.
template <class F>
bool for_each_part(const Word& w, F&& f) {
  if (!in_yh(w)) return false;
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::Y && i > 0) {
      f(run);
      run = 0;
    }
    ++run;
  }
  if (!w.empty()) f(run);
  return true;
}

}  // namespace

bool in_hgeq2(const Word& w) noexcept {
  bool ok = true;
  if (!for_each_part(w, [&](int k) { ok = ok && k >= 2; })) return false;
  return ok;
}

bool in_h23(const Word& w) noexcept {
  bool ok = true;
  if (!for_each_part(w, [&](int k) { ok = ok && (k == 2 || k == 3); })) return false;
  return ok;
}

Membership membership(const Word& w) {
  return Membership{in_h0(w), in_h23(w), in_hgeq2(w), in_yh(w)};
}

// --- conversions -----------------------------------------------------------

Word to_word(const Composition& k) {
  Word w;
  for (int part : k.parts) {
    if (part < 1) throw DomainError("composition parts must be >= 1");
    w.push_back(Letter::Y);
    w.append(Letter::X, static_cast<std::size_t>(part - 1));
  }
  return w;
}

Word to_word(const ExponentTuple& c) {
  if (c.size() % 2 != 0) throw DomainError("exponent tuple must have even length");
  Word w;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.entries[i] < 1) throw DomainError("exponent tuple entries must be >= 1");
    w.append(i % 2 == 0 ? Letter::Y : Letter::X, static_cast<std::size_t>(c.entries[i]));
  }
  return w;
}

Word to_word(const BracketForm& br) { return to_word(to_exponent_tuple(br)); }

Composition to_composition(const Word& w) {
  Composition k;
  if (!for_each_part(w, [&](int part) { k.parts.push_back(part); }))
    throw DomainError("word '" + w.str() + "' is not in Z + yH (does not start with y)");
  return k;
}

ExponentTuple to_exponent_tuple(const Word& w) {
  if (!in_h0(w)) throw DomainError("word '" + w.str() + "' is not in H^0 (must start with y and end with x)");
  ExponentTuple c;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    c.entries.push_back(static_cast<int>(j - i));
    i = j;
  }
  return c;
}

int BracketForm::half_length() const noexcept {
  return std::accumulate(a.begin(), a.end(), 0) + std::accumulate(b.begin(), b.end(), 0) + c - 1;
}

std::vector<int> BracketForm::a_prefix_sums() const {
  std::vector<int> l(a.size());
  std::partial_sum(a.begin(), a.end(), l.begin());
  return l;
}

std::vector<int> BracketForm::b_prefix_sums() const {
  std::vector<int> m(b.size());
  std::partial_sum(b.begin(), b.end(), m.begin());
  return m;
}

ExponentTuple to_exponent_tuple(const BracketForm& br) {
  auto positive = [](int v) { return v >= 1; };
  if (br.c < 1 || !std::all_of(br.a.begin(), br.a.end(), positive) ||
      !std::all_of(br.b.begin(), br.b.end(), positive))
    throw DomainError("bracket form entries must be >= 1");
  ExponentTuple out;
  auto ones = [&](int n) { out.entries.insert(out.entries.end(), static_cast<std::size_t>(n), 1); };
  for (int ai : br.a) {
    ones(2 * ai - 1);
    out.entries.push_back(2);
  }
  ones(2 * br.c - 2);
  for (int bj : br.b) {
    out.entries.push_back(2);
    ones(2 * bj - 1);
  }
  return out;
}

BracketForm to_bracket_form(const ExponentTuple& c) {
  const auto fail = [&] {
    return DomainError("exponent tuple (" + to_string(c) + ") is not of bracket form [a;b;c]");
  };
  if (c.size() % 2 != 0) throw fail();
  std::vector<int> even_twos, odd_twos;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    if (c.entries[i] == 2)
      (pos % 2 == 0 ? even_twos : odd_twos).push_back(pos);
    else if (c.entries[i] != 1)
      throw fail();
  }
  if (!even_twos.empty() && !odd_twos.empty() && even_twos.back() > odd_twos.front()) throw fail();

  BracketForm br;
  int prev = 0;
  for (int pos : even_twos) {
    br.a.push_back(pos / 2 - prev);
    prev = pos / 2;
  }
  const int lr = prev;
  const int t = static_cast<int>(c.size()) / 2;
  if (odd_twos.empty()) {
    br.c = t - lr + 1;
  } else {
    if ((odd_twos.front() + 1 - 2 * lr) % 2 != 0) throw fail();
    br.c = (odd_twos.front() + 1 - 2 * lr) / 2;
    const int ms = t - lr - br.c + 1;
    int m_prev = 0;
    for (std::size_t j = 1; j <= odd_twos.size(); ++j) {
      const int m = j < odd_twos.size() ? (odd_twos[j] - odd_twos.front()) / 2 : ms;
      br.b.push_back(m - m_prev);
      m_prev = m;
    }
  }
  if (br.c < 1) throw fail();
  for (int v : br.a)
    if (v < 1) throw fail();
  for (int v : br.b)
    if (v < 1) throw fail();
  if (to_exponent_tuple(br) != c) throw fail();
  return br;
}

BracketForm to_bracket_form(const Word& w) { return to_bracket_form(to_exponent_tuple(w)); }

RunBlocks to_run_blocks(const Composition& k) {
  if (!k.admissible())
    throw DomainError("composition (" + to_string(k) + ") has last part 1; run blocks need k_r >= 2");
  RunBlocks rb;
  int ones = 0;
  for (int part : k.parts) {
    if (part < 1) throw DomainError("composition parts must be >= 1");
    if (part == 1) {
      ++ones;
    } else {
      rb.blocks.push_back({ones + 1, part - 1});
      ones = 0;
    }
  }
  return rb;
}

Composition to_composition(const RunBlocks& rb) {
  Composition k;
  for (const auto& blk : rb.blocks) {
    if (blk.a < 1 || blk.b < 1) throw DomainError("run block entries must be >= 1");
    k.parts.insert(k.parts.end(), static_cast<std::size_t>(blk.a - 1), 1);
    k.parts.push_back(blk.b + 1);
  }
  return k;
}

std::vector<int> ones_positions(const ExponentTuple& c) {
  std::vector<int> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.entries[i] == 1) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> big_positions(const ExponentTuple& c) {
  std::vector<int> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.entries[i] > 1) out.push_back(static_cast<int>(i) + 1);
  return out;
}

// --- text ------------------------------------------------------------------

namespace {

// Non-blank characters paired with their offsets in the original string.
struct Stripped {
  std::string text;
  std::vector<std::size_t> origin;

  explicit Stripped(std::string_view raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) continue;
      if (static_cast<unsigned char>(raw[i]) >= 0x80) throw ParseError("non-ASCII character", i);
      text.push_back(raw[i]);
      origin.push_back(i);
    }
    origin.push_back(raw.size());
  }
};

// Parses "n1,n2,..." starting at `pos` up to (excluding) `end`; empty range is allowed
// only when allow_empty.
std::vector<int> parse_int_list(const Stripped& s, std::size_t pos, std::size_t end, bool allow_empty) {
  std::vector<int> out;
  if (pos == end) {
    if (allow_empty) return out;
    throw ParseError("expected a positive integer", s.origin[pos]);
  }
  while (true) {
    if (pos >= end || !std::isdigit(static_cast<unsigned char>(s.text[pos])))
      throw ParseError("expected a positive integer", s.origin[pos]);
    const std::size_t start = pos;
    long long v = 0;
    while (pos < end && std::isdigit(static_cast<unsigned char>(s.text[pos]))) {
      v = v * 10 + (s.text[pos] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", s.origin[start]);
      ++pos;
    }
    if (v < 1) throw ParseError("part must be >= 1", s.origin[start]);
    out.push_back(static_cast<int>(v));
    if (pos == end) return out;
    if (s.text[pos] != ',') throw ParseError("expected ','", s.origin[pos]);
    ++pos;
  }
}

}  // namespace

std::variant<Word, Composition> parse_word(std::string_view text) {
  const Stripped s(text);
  if (s.text.empty() || s.text == "()") return Word{};
  const char first = s.text.front();
  if (first == 'x' || first == 'y') {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < s.text.size(); ++i) {
      if (s.text[i] == 'x')
        letters.push_back(Letter::X);
      else if (s.text[i] == 'y')
        letters.push_back(Letter::Y);
      else
        throw ParseError("expected 'x' or 'y'", s.origin[i]);
    }
    return Word(std::move(letters));
  }
  if (std::isdigit(static_cast<unsigned char>(first)))
    return Composition{parse_int_list(s, 0, s.text.size(), false)};
  throw ParseError("expected a letter word or a composition", s.origin[0]);
}

BracketForm parse_bracket(std::string_view text) {
  const Stripped s(text);
  if (s.text.empty() || s.text.front() != '[') throw ParseError("expected '['", s.origin[0]);
  if (s.text.back() != ']') throw ParseError("expected ']'", s.origin[s.text.size() - 1]);
  const std::size_t semi1 = s.text.find(';');
  if (semi1 == std::string::npos) throw ParseError("expected ';'", s.origin[s.text.size() - 1]);
  const std::size_t semi2 = s.text.find(';', semi1 + 1);
  if (semi2 == std::string::npos) throw ParseError("expected second ';'", s.origin[s.text.size() - 1]);
  BracketForm br;
  br.a = parse_int_list(s, 1, semi1, true);
  br.b = parse_int_list(s, semi1 + 1, semi2, true);
  const auto cs = parse_int_list(s, semi2 + 1, s.text.size() - 1, false);
  if (cs.size() != 1) throw ParseError("c must be a single integer", s.origin[semi2 + 1]);
  br.c = cs.front();
  return br;
}

Word parse_any_word(std::string_view text) {
  const Stripped s(text);
  if (!s.text.empty() && s.text.front() == '[') return to_word(parse_bracket(text));
  auto parsed = parse_word(text);
  if (auto* w = std::get_if<Word>(&parsed)) return std::move(*w);
  return to_word(std::get<Composition>(parsed));
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Composition& k) { return join(k.parts); }

std::string to_string(const ExponentTuple& c) { return join(c.entries); }

std::string to_string(const BracketForm& br) {
  return "[" + join(br.a) + ";" + join(br.b) + ";" + std::to_string(br.c) + "]";
}

std::string to_string(const RunBlocks& rb) {
  std::string s;
  for (std::size_t i = 0; i < rb.blocks.size(); ++i) {
    if (i) s += ' ';
    s += "(" + std::to_string(rb.blocks[i].a) + "," + std::to_string(rb.blocks[i].b) + ")";
  }
  return s;
}

// --- enumeration -----------------------------------------------------------

namespace {

void compositions_rec(int remaining, int min_part, int max_part, std::vector<int>& cur,
                      std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(Composition{cur});
    return;
  }
  for (int p = min_part; p <= std::min(max_part, remaining); ++p) {
    cur.push_back(p);
    compositions_rec(remaining - p, min_part, max_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int total, int min_part, int max_part) {
  std::vector<Composition> out;
  if (total < 0) return out;
  if (max_part <= 0) max_part = std::max(total, 1);
  std::vector<int> cur;
  compositions_rec(total, std::max(min_part, 1), max_part, cur, out);
  return out;
}

std::vector<Word> h23_words(int weight) {
  std::vector<Word> out;
  for (const auto& k : compositions(weight, 2, 3)) out.push_back(to_word(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> hgeq2_words(int weight) {
  std::vector<Word> out;
  for (const auto& k : compositions(weight, 2)) out.push_back(to_word(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> h0_words(int weight) {
  std::vector<Word> out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  if (weight < 2) return out;
  const int free = weight - 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
    Word w;
    w.push_back(Letter::Y);
    for (int i = 0; i < free; ++i) w.push_back((mask >> i) & 1 ? Letter::X : Letter::Y);
    w.push_back(Letter::X);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mzv
