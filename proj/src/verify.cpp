#include "mzv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <utility>

#include "mzv/error.hpp"
#include "mzv/numeric.hpp"
#include "parallel.hpp"

namespace mzv {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Exception: return "exception";
  }
  return "exception";
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check_name;
  j["params"] = params;
  j["cases_total"] = cases_total;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) j["failures"].push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  j["elapsed_ms"] = elapsed_ms;
  j["status"] = to_string(status);
  j["notes"] = notes;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string CheckReport::failures_csv() const {
  std::string out = "input,lhs,rhs\n";
  for (const auto& f : failures) out += csv_field(f.input) + "," + csv_field(f.lhs) + "," + csv_field(f.rhs) + "\n";
  return out;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << check_name << ": " << to_string(status) << " (" << cases_total << " cases, " << failures.size()
     << " failures, " << notes.size() << " notes, " << elapsed_ms << " ms)";
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Workspace {
  explicit Workspace(std::size_t cap) : drop1(cap) {}

  Drop1 drop1;
  StarProduct star;
  std::map<std::pair<std::vector<int>, std::uint64_t>, std::uint64_t> zeta_cache;

  std::uint64_t zeta_p(const Composition& k, std::uint64_t p) {
    auto key = std::make_pair(k.parts, p);
    if (auto it = zeta_cache.find(key); it != zeta_cache.end()) return it->second;
    const auto v = zeta_p_mod(k, p).residue;
    zeta_cache.emplace(std::move(key), v);
    return v;
  }

  std::uint64_t zeta_p(const Word& w, std::uint64_t p) { return zeta_p(to_composition(w), p); }

  // Integer-coefficient combination, evaluated mod p.
  std::uint64_t zeta_p(const LinComb& lc, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (const auto& [w, c] : lc.terms()) {
      if (c.get_den() != 1) throw DomainError("expected an integral combination");
      mpz_class r = c.get_num() % p;
      if (r < 0) r += p;
      acc = (acc + mul_mod(r.get_ui(), zeta_p(w, p), p)) % p;
    }
    return acc;
  }
};

struct Outcome {
  std::optional<Failure> failure;
  std::optional<std::string> note;
};

template <class Body>
CheckReport run_check(std::string name, nlohmann::ordered_json params, Body&& body) {
  CheckReport rep;
  rep.check_name = std::move(name);
  rep.params = std::move(params);
  const auto t0 = Clock::now();
  try {
    body(rep);
    rep.status = rep.failures.empty() ? Status::Pass : Status::Fail;
  } catch (const std::exception& e) {
    rep.status = Status::Exception;
    rep.notes.push_back(std::string("exception: ") + e.what());
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  std::stable_sort(rep.failures.begin(), rep.failures.end(),
                   [](const Failure& a, const Failure& b) { return a.input < b.input; });
  return rep;
}

// Evaluates n independent cases (each may yield several outcomes) and merges
// them in index order.
template <class Case>
void run_cases(CheckReport& rep, std::size_t n, const VerifyOptions& opts, Case&& one_case) {
  std::vector<std::vector<Outcome>> results(n);
  detail::parallel_for(
      n, opts.threads, [&] { return Workspace(opts.memo_cap); },
      [&](std::size_t i, Workspace& ws) { results[i] = one_case(i, ws); });
  for (auto& outcomes : results) {
    for (auto& o : outcomes) {
      ++rep.cases_total;
      if (o.failure) rep.failures.push_back(std::move(*o.failure));
      if (o.note) rep.notes.push_back(std::move(*o.note));
    }
  }
}

Outcome compare(const std::string& input, const LinComb& lhs, const LinComb& rhs) {
  if (lhs == rhs) return {};
  return Outcome{Failure{input, lhs.str(), rhs.str()}, std::nullopt};
}

std::string pair_label(const Word& w1, const Word& w2) {
  return "w1=" + word_label(w1) + "; w2=" + word_label(w2);
}

std::vector<std::pair<Word, Word>> h23_pairs(int max_total_weight) {
  std::vector<std::vector<Word>> by_weight;
  for (int w = 0; w <= max_total_weight; ++w) by_weight.push_back(h23_words(w));
  std::vector<std::pair<Word, Word>> pairs;
  for (int w1 = 0; w1 <= max_total_weight; ++w1)
    for (int w2 = 0; w1 + w2 <= max_total_weight; ++w2)
      for (const auto& u : by_weight[static_cast<std::size_t>(w1)])
        for (const auto& v : by_weight[static_cast<std::size_t>(w2)]) pairs.emplace_back(u, v);
  return pairs;
}

Word word_of(std::initializer_list<std::pair<int, int>> runs) {
  // (part, repeat) runs
  Composition k;
  for (auto [part, count] : runs) k.parts.insert(k.parts.end(), static_cast<std::size_t>(std::max(count, 0)), part);
  return to_word(k);
}

void require_primes(std::span<const std::uint64_t> primes) {
  for (auto p : primes)
    if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
}

nlohmann::ordered_json primes_json(std::span<const std::uint64_t> primes) {
  return nlohmann::ordered_json(std::vector<std::uint64_t>(primes.begin(), primes.end()));
}

std::uint64_t negate_mod(std::uint64_t x, std::uint64_t p) { return x == 0 ? 0 : p - x; }

}  // namespace

CheckReport check_main_theorem(int max_total_weight, const VerifyOptions& opts) {
  return run_check("main", {{"max_weight", max_total_weight}}, [&](CheckReport& rep) {
    const auto pairs = h23_pairs(max_total_weight);
    run_cases(rep, pairs.size(), opts, [&](std::size_t i, Workspace& ws) {
      const auto& [w1, w2] = pairs[i];
      return std::vector<Outcome>{compare(pair_label(w1, w2), ws.drop1(w1 + tau(w2)), ws.star(w1, w2))};
    });
  });
}

CheckReport check_drop1_axioms(int max_weight, const VerifyOptions& opts) {
  return run_check("axioms", {{"max_weight", max_weight}}, [&](CheckReport& rep) {
    std::vector<Word> words;
    for (int w = 0; w <= max_weight; ++w)
      for (auto& v : h0_words(w)) words.push_back(std::move(v));
    run_cases(rep, words.size(), opts, [&](std::size_t i, Workspace& ws) {
      const Word& w = words[i];
      const std::string label = word_label(w);
      std::vector<Outcome> out;
      const LinComb image = ws.drop1(w);
      if (in_hgeq2(w)) out.push_back(compare("fixed point: " + label, image, LinComb(w)));
      out.push_back(compare("tau invariance: " + label, image, ws.drop1(tau(w))));
      out.push_back(compare("idempotence: " + label, ws.drop1(image), image));
      return out;
    });
  });
}

CheckReport check_hs_families(int a_max, int b_max, int c_max, const VerifyOptions& opts) {
  nlohmann::ordered_json params{{"a_max", a_max}, {"b_max", b_max}, {"c_max", c_max}};
  return run_check("families", std::move(params), [&](CheckReport& rep) {
    std::vector<std::array<int, 3>> triples;
    for (int a = 1; a <= a_max; ++a)
      for (int b = 1; b <= b_max; ++b)
        for (int c = 1; c <= c_max; ++c) triples.push_back({a, b, c});
    run_cases(rep, triples.size(), opts, [&](std::size_t i, Workspace& ws) {
      const auto [a, b, c] = triples[i];
      const std::string label =
          "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
      const Word w = word_of({{2, a - 1}, {3, 1}, {2, c - 1}, {1, 1}, {2, b}});
      const Word w1 = word_of({{2, a - 1}, {3, 1}, {2, c - 1}});
      const Word w2 = word_of({{2, b - 1}, {3, 1}});
      LinComb expansion(word_of({{2, a + b + c}}));
      expansion.add_term(word_of({{2, a - 1}, {3, 1}, {2, b - 1}, {3, 1}, {2, c - 1}}), 1);
      expansion.add_term(word_of({{2, b - 1}, {3, 1}, {2, a - 1}, {3, 1}, {2, c - 1}}), 1);

      std::vector<Outcome> out;
      const LinComb image = ws.drop1(w);
      if (w != w1 + tau(w2))
        out.push_back({Failure{"specialization " + label, word_label(w), word_label(w1 + tau(w2))}, std::nullopt});
      else
        out.emplace_back();
      out.push_back(compare("drop1 expansion " + label, image, expansion));
      out.push_back(compare("star expansion " + label, ws.star(w1, w2), expansion));
      if (a == 1 && b == 1) {
        LinComb hoffman(word_of({{2, c + 2}}));
        hoffman.add_term(word_of({{3, 2}, {2, c - 1}}), 2);
        out.push_back(compare("Hoffman identity c=" + std::to_string(c), image, hoffman));
      }
      return out;
    });
  });
}

CheckReport check_fmzv(int max_total_weight, std::span<const std::uint64_t> primes,
                       std::optional<std::uint64_t> small_prime_bound, const VerifyOptions& opts) {
  require_primes(primes);
  nlohmann::ordered_json params{{"max_weight", max_total_weight}, {"primes", primes_json(primes)}};
  params["small_prime_bound"] = small_prime_bound ? nlohmann::ordered_json(*small_prime_bound)
                                                  : nlohmann::ordered_json("weight+1");
  return run_check("fmzv", std::move(params), [&](CheckReport& rep) {
    const auto pairs = h23_pairs(max_total_weight);
    const std::size_t n_pairs = pairs.size();
    constexpr int kExtraMax = 3;  // c = 1..3 for the closed-form families
    const std::size_t n_units = n_pairs + kExtraMax;
    const std::size_t n = n_units * primes.size();

    auto exempt = [&](std::uint64_t p, int weight) {
      const std::uint64_t bound = small_prime_bound ? *small_prime_bound : static_cast<std::uint64_t>(weight) + 1;
      return p <= bound;
    };
    auto outcome = [&](bool ok, const std::string& input, std::uint64_t lhs, std::uint64_t rhs, std::uint64_t p,
                       int weight) -> Outcome {
      if (ok) return {};
      if (exempt(p, weight))
        return {std::nullopt, "small-prime exception: " + input + " (" + std::to_string(lhs) +
                                  " != " + std::to_string(rhs) + ")"};
      return {Failure{input, std::to_string(lhs), std::to_string(rhs)}, std::nullopt};
    };

    run_cases(rep, n, opts, [&](std::size_t idx, Workspace& ws) {
      const std::uint64_t p = primes[idx / n_units];
      const std::size_t unit = idx % n_units;
      const std::string at_p = " mod " + std::to_string(p);
      std::vector<Outcome> out;
      if (unit < n_pairs) {
        const auto& [w1, w2] = pairs[unit];
        const int wt = weight(w1) + weight(w2);
        const std::string label = pair_label(w1, w2) + at_p;
        const Word reversed = w1 + to_word(reverse(to_composition(w2)));
        std::uint64_t lhs = ws.zeta_p(reversed, p);
        if (weight(w2) % 2 != 0) lhs = negate_mod(lhs, p);
        const LinComb starred = ws.star(w1, w2);
        const LinComb shuffled = shuffle(w1, w2);
        const std::uint64_t star_v = ws.zeta_p(starred, p);
        const std::uint64_t shuffle_v = ws.zeta_p(shuffled, p);
        const std::uint64_t double_v = ws.zeta_p(shuffled - starred, p);
        out.push_back(outcome(lhs == star_v, "reversal/star " + label, lhs, star_v, p, wt));
        out.push_back(outcome(lhs == shuffle_v, "reversal/shuffle " + label, lhs, shuffle_v, p, wt));
        out.push_back(outcome(double_v == 0, "double shuffle " + label, double_v, 0, p, wt));
      } else {
        const int c = static_cast<int>(unit - n_pairs) + 1;
        const Composition twos{std::vector<int>(static_cast<std::size_t>(c + 2), 2)};
        const std::uint64_t tv = ws.zeta_p(twos, p);
        out.push_back(outcome(tv == 0, "zeta_p(2^" + std::to_string(c + 2) + ")" + at_p, tv, 0, p, 2 * (c + 2)));

        Composition k1{{3}};
        k1.parts.insert(k1.parts.end(), static_cast<std::size_t>(c - 1), 2);
        k1.parts.push_back(3);
        Composition k2{{3, 3}};
        k2.parts.insert(k2.parts.end(), static_cast<std::size_t>(c - 1), 2);
        const std::uint64_t hv = (ws.zeta_p(k1, p) + mul_mod(2, ws.zeta_p(k2, p), p)) % p;
        out.push_back(outcome(hv == 0, "Hoffman FMZV c=" + std::to_string(c) + at_p, hv, 0, p, 2 * c + 4));
      }
      return out;
    });
  });
}

CheckReport check_lemma41(int weight_max, std::span<const std::uint64_t> primes, const VerifyOptions& opts) {
  require_primes(primes);
  nlohmann::ordered_json params{{"max_weight", weight_max}, {"primes", primes_json(primes)}};
  return run_check("lemma41", std::move(params), [&](CheckReport& rep) {
    std::vector<Composition> ks;
    for (int w = 2; w <= weight_max; ++w)
      for (auto& k : compositions(w))
        if (k.admissible()) ks.push_back(std::move(k));
    const std::size_t n = ks.size() * primes.size();
    run_cases(rep, n, opts, [&](std::size_t idx, Workspace& ws) {
      const std::uint64_t p = primes[idx / ks.size()];
      const Composition& k = ks[idx % ks.size()];
      const RunBlocks rb = to_run_blocks(k);
      int l = 0;
      Composition merged;
      for (const auto& blk : rb.blocks) {
        l += blk.a - 1;
        merged.parts.push_back(blk.a + blk.b);
      }
      const std::uint64_t lhs = diamond_flat_p(k, p).residue;
      std::uint64_t rhs = ws.zeta_p(merged, p);
      if (l % 2 != 0) rhs = negate_mod(rhs, p);
      if (lhs == rhs) return std::vector<Outcome>(1);
      return std::vector<Outcome>{
          {Failure{"k=" + to_string(k) + " mod " + std::to_string(p), std::to_string(lhs), std::to_string(rhs)},
           std::nullopt}};
    });
  });
}

CheckReport check_hoffman_diamond(int c_max, std::uint64_t n_max, const VerifyOptions& opts) {
  nlohmann::ordered_json params{{"c_max", c_max}, {"n_max", n_max}};
  return run_check("hoffman-diamond", std::move(params), [&](CheckReport& rep) {
    std::vector<std::pair<int, std::uint64_t>> grid;
    for (int c = 1; c <= c_max; ++c)
      for (std::uint64_t N = 2; N <= n_max; ++N) grid.emplace_back(c, N);
    run_cases(rep, grid.size(), opts, [&](std::size_t i, Workspace&) {
      const auto [c, N] = grid[i];
      const auto inst = hoffman_diamond_instance(c, N);
      if (inst.lhs == inst.rhs) return std::vector<Outcome>(1);
      return std::vector<Outcome>{{Failure{"c=" + std::to_string(c) + " N=" + std::to_string(N),
                                           inst.lhs.get_str(), inst.rhs.get_str()},
                                   std::nullopt}};
    });
  });
}

CheckReport check_cancellation(int max_ab_sum, const VerifyOptions& opts) {
  return run_check("cancellation", {{"max_ab_sum", max_ab_sum}}, [&](CheckReport& rep) {
    std::vector<BracketForm> brackets;
    for (int sa = 1; sa < max_ab_sum; ++sa)
      for (int sb = 1; sa + sb <= max_ab_sum; ++sb)
        for (const auto& a : compositions(sa))
          for (const auto& b : compositions(sb)) brackets.push_back(BracketForm{a.parts, b.parts, 1});

    run_cases(rep, brackets.size(), opts, [&](std::size_t i, Workspace& ws) {
      const BracketForm& br = brackets[i];
      const ExponentTuple c = to_exponent_tuple(br);
      const int lr = br.a_prefix_sums().back();
      const int left = 2 * lr, right = 2 * lr + 1;
      std::vector<int> big;
      for (int pos : big_positions(c))
        if (pos != left && pos != right) big.push_back(pos);
      const auto ones = ones_positions(c);

      std::vector<Outcome> out;
      for (const IndexSet& A : enumerate_family(FamilyKind::EO, ones)) {
        for (const IndexSet& B : enumerate_family(FamilyKind::NoEO, big)) {
          auto with = [&](std::initializer_list<int> extra) {
            IndexSet b = B;
            b.insert(b.end(), extra);
            std::sort(b.begin(), b.end());
            return ws.drop1.frak_d(tuple_surgery(c, SurgerySpec{A, b}));
          };
          const LinComb lhs = with({});
          const LinComb rhs =
              append_x_power(with({left}), 1) + append_x_power(with({right}), 1) + append_z(with({left, right}), 2);
          std::ostringstream label;
          label << to_string(br) << " A={";
          for (std::size_t j = 0; j < A.size(); ++j) label << (j ? "," : "") << A[j];
          label << "} B={";
          for (std::size_t j = 0; j < B.size(); ++j) label << (j ? "," : "") << B[j];
          label << "}";
          out.push_back(compare(label.str(), lhs, rhs));
        }
      }
      return out;
    });
  });
}

bool factors_as_w1_tau_w2(const Word& w) {
  for (std::size_t cut = 0; cut <= w.size(); ++cut)
    if (in_h23(w.prefix(cut)) && in_h23(tau(w.suffix_from(cut)))) return true;
  return false;
}

CheckReport scan_conjectures(int max_weight, const VerifyOptions& opts) {
  return run_check("conjectures", {{"max_weight", max_weight}}, [&](CheckReport& rep) {
    std::vector<Word> words;
    for (int w = 0; w <= max_weight; ++w)
      for (auto& v : h0_words(w)) words.push_back(std::move(v));

    std::vector<LinComb> images(words.size());
    detail::parallel_for(
        words.size(), opts.threads, [&] { return Drop1(opts.memo_cap); },
        [&](std::size_t i, Drop1& d) { images[i] = d(words[i]); });

    // Image scan.
    for (std::size_t i = 0; i < words.size(); ++i) {
      ++rep.cases_total;
      if (images[i].all_words([](const Word& v) { return in_h23(v); }) && !factors_as_w1_tau_w2(words[i])) {
        rep.failures.push_back({"image of " + word_label(words[i]), images[i].str(), "not a w1 tau(w2) word"});
        rep.notes.push_back("mathematical finding: D(" + word_label(words[i]) +
                            ") lies in H^{2,3} although the word has no w1 tau(w2) factorization");
      }
    }

    // Fiber scan; the serialization is canonical, so it serves as the key.
    std::map<std::string, std::vector<std::size_t>> fibers;
    for (std::size_t i = 0; i < words.size(); ++i) fibers[images[i].str()].push_back(i);
    for (const auto& [image, members] : fibers) {
      ++rep.cases_total;
      const Word& w0 = words[members.front()];
      const Word t0 = tau(w0);
      bool ok = true;
      std::string listed;
      for (std::size_t idx : members) {
        ok = ok && (words[idx] == w0 || words[idx] == t0);
        listed += (listed.empty() ? "" : " ") + word_label(words[idx]);
      }
      if (!ok) {
        rep.failures.push_back({"fiber of " + image, "{" + listed + "}", "{w, tau(w)}"});
        rep.notes.push_back("mathematical finding: D takes the value " + image + " on {" + listed +
                            "}, which is not of the form {w, tau(w)}");
      }
    }
  });
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi && n >= lo; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

}  // namespace mzv
