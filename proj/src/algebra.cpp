#include "mzv/algebra.hpp"

#include <vector>

#include "mzv/error.hpp"

namespace mzv {

LinComb::LinComb(Word w, Rational coeff) {
  if (coeff != 0) terms_.emplace(std::move(w), std::move(coeff));
}

Rational LinComb::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add_term(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void LinComb::add_term(Word&& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= r;
  return *this;
}

bool LinComb::is_integral() const {
  for (const auto& [w, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

bool LinComb::all_nonnegative() const {
  for (const auto& [w, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool LinComb::all_words(const std::function<bool(const Word&)>& pred) const {
  for (const auto& [w, c] : terms_)
    if (!pred(w)) return false;
  return true;
}

std::string word_label(const Word& w) {
  if (w.empty()) return "()";
  if (!in_yh(w)) return w.str();
  return to_string(to_composition(w));
}

std::string LinComb::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "−" : "";
    else
      out += negative ? " − " : " + ";
    first = false;
    const Rational mag = abs(c);
    out += mag.get_str();
    out += "·";
    out += word_label(w);
  }
  return out;
}

LinComb add(const LinComb& p, const LinComb& q) { return p + q; }

LinComb scale(const LinComb& p, const Rational& r) { return p * r; }

LinComb concat(const LinComb& p, const LinComb& q) {
  LinComb out;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) out.add_term(u + v, a * b);
  return out;
}

LinComb append_x_power(const LinComb& p, int m) {
  if (m < 0) throw DomainError("append_x_power needs m >= 0");
  if (m == 0) return p;
  LinComb out;
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) throw DomainError("append_x_power: cannot append x to the empty word");
    Word v = w;
    v.append(Letter::X, static_cast<std::size_t>(m));
    out.add_term(std::move(v), c);
  }
  return out;
}

LinComb append_z(const LinComb& p, int k) {
  const Word zk = z(k);
  LinComb out;
  for (const auto& [w, c] : p.terms()) out.add_term(w + zk, c);
  return out;
}

LinComb shuffle(const Word& u, const Word& v) {
  // table[i][j] = u[0..i) sh v[0..j)
  const std::size_t n = u.size(), m = v.size();
  std::vector<std::vector<LinComb>> table(n + 1, std::vector<LinComb>(m + 1));
  table[0][0] = LinComb::one();
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      LinComb cell;
      if (i > 0)
        for (const auto& [w, c] : table[i - 1][j].terms()) {
          Word x = w;
          x.push_back(u[i - 1]);
          cell.add_term(std::move(x), c);
        }
      if (j > 0)
        for (const auto& [w, c] : table[i][j - 1].terms()) {
          Word x = w;
          x.push_back(v[j - 1]);
          cell.add_term(std::move(x), c);
        }
      table[i][j] = std::move(cell);
    }
  }
  return std::move(table[n][m]);
}

LinComb shuffle(const LinComb& p, const LinComb& q) {
  LinComb out;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) out += shuffle(u, v) * (a * b);
  return out;
}

namespace {

// Length of the trailing z_2 / z_3 of a nonempty H^{2,3} word.
std::size_t last_part_length(const Word& w) { return w[w.size() - 2] == Letter::Y ? 2 : 3; }

Word drop_last_part(const Word& w) { return w.prefix(w.size() - last_part_length(w)); }

}  // namespace

const LinComb& StarProduct::eval(const Word& w1, const Word& w2) {
  auto key = std::make_pair(w1, w2);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LinComb result;
  if (w1.empty()) {
    result = LinComb(w2);
  } else if (w2.empty()) {
    result = LinComb(w1);
  } else if (last_part_length(w1) == 2) {
    result = append_z(eval(drop_last_part(w1), w2), 2);
  } else if (last_part_length(w2) == 2) {
    result = append_z(eval(w1, drop_last_part(w2)), 2);
  } else {
    const Word u = drop_last_part(w1);
    const Word v = drop_last_part(w2);
    result = append_z(eval(u, w2), 3);
    result += append_z(eval(w1, v), 3);
    result += append_z(append_z(append_z(eval(u, v), 2), 2), 2);
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

LinComb StarProduct::operator()(const Word& w1, const Word& w2) {
  if (!in_h23(w1)) throw DomainError("star: '" + w1.str() + "' is not in H^{2,3}");
  if (!in_h23(w2)) throw DomainError("star: '" + w2.str() + "' is not in H^{2,3}");
  return eval(w1, w2);
}

LinComb StarProduct::operator()(const LinComb& p, const LinComb& q) {
  LinComb out;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) out += (*this)(u, v) * (a * b);
  return out;
}

LinComb star(const Word& w1, const Word& w2) {
  thread_local StarProduct engine;
  return engine(w1, w2);
}

LinComb star(const LinComb& p, const LinComb& q) {
  thread_local StarProduct engine;
  return engine(p, q);
}

LinComb map_linear(const LinComb& p, const std::function<Word(const Word&)>& f) {
  LinComb out;
  for (const auto& [w, c] : p.terms()) out.add_term(f(w), c);
  return out;
}

LinComb tau(const LinComb& p) {
  return map_linear(p, [](const Word& w) { return tau(w); });
}

LinComb reverse(const LinComb& p) {
  return map_linear(p, [](const Word& w) { return to_word(reverse(to_composition(w))); });
}

}  // namespace mzv
