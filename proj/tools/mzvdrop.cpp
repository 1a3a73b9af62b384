// mzvdrop: command-line front end for the word algebra, the drop-1 operator,
// the numeric evaluators and the verification checkers.
//
// Exit codes: 0 success / checks passed, 1 a checker reported failures,
// 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mzv/algebra.hpp"
#include "mzv/drop1.hpp"
#include "mzv/error.hpp"
#include "mzv/numeric.hpp"
#include "mzv/verify.hpp"
#include "mzv/words.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  unsigned threads = 1;
  std::size_t memo_cap = mzv::kDefaultMemoCap;
};

unsigned default_threads() {
  if (const char* env = std::getenv("MZVDROP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<std::uint64_t> parse_primes(const std::string& spec) {
  const auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      const auto p = std::stoull(spec);
      return {p};
    }
    const auto lo = std::stoull(spec.substr(0, dots));
    const auto hi = std::stoull(spec.substr(dots + 2));
    if (lo > hi) throw UsageError("empty prime range '" + spec + "'");
    return mzv::primes_in_range(lo, hi);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed prime range '" + spec + "' (expected lo..hi)");
  } catch (const std::out_of_range&) {
    throw UsageError("prime range '" + spec + "' out of range");
  }
}

std::string membership_text(const mzv::Membership& m) {
  std::string s;
  auto flag = [&](const char* name, bool v) { s += std::string(s.empty() ? "" : " ") + name + "=" + (v ? "1" : "0"); };
  flag("H0", m.in_h0);
  flag("H23", m.in_h23);
  flag("Hgeq2", m.in_hgeq2);
  flag("yH", m.in_yh);
  return s;
}

// Emits a single operation result in the chosen format.
void emit(const Globals& g, const std::string& op, const std::string& input, const std::string& result,
          json extra = json::object()) {
  if (g.format == "json") {
    json j;
    j["op"] = op;
    j["input"] = input;
    j["result"] = result;
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "input,result\n\"" << input << "\",\"" << result << "\"\n";
  } else {
    std::cout << result << "\n";
  }
}

int emit_report(const Globals& g, const mzv::CheckReport& rep) {
  if (g.format == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << rep.failures_csv();
  } else {
    std::cout << rep.summary() << "\n";
    for (const auto& f : rep.failures) std::cout << "  FAIL " << f.input << ": " << f.lhs << " != " << f.rhs << "\n";
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
  }
  switch (rep.status) {
    case mzv::Status::Pass: return kExitOk;
    case mzv::Status::Fail: return kExitFailures;
    case mzv::Status::Exception:
      std::cerr << "mzvdrop: " << rep.check_name << " aborted: "
                << (rep.notes.empty() ? std::string("unknown error") : rep.notes.back()) << "\n";
      return kExitUsage;
  }
  return kExitUsage;
}

mzv::Word word_arg(const std::string& text) { return mzv::parse_any_word(text); }

mzv::Composition composition_arg(const std::string& text) { return mzv::to_composition(word_arg(text)); }

std::string rational_text(const mzv::Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  g.threads = default_threads();

  CLI::App app{"Drop-1 operator, star product and multiple zeta value checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (default from MZVDROP_THREADS, else 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--memo-cap", g.memo_cap, "Maximum drop-1 memo entries per worker")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::function<int()> action;

  // parse
  std::string parse_text;
  auto* parse = app.add_subcommand("parse", "Parse a word and show its encodings, weight, depth and membership");
  parse->add_option("text", parse_text, "Letter word, composition or bracket form")->required();
  parse->callback([&] {
    action = [&] {
      const mzv::Word w = word_arg(parse_text);
      json extra;
      extra["letters"] = w.str();
      const auto m = mzv::membership(w);
      if (m.in_yh) {
        const auto k = mzv::to_composition(w);
        extra["composition"] = mzv::to_string(k);
        extra["depth"] = mzv::depth(k);
      }
      if (m.in_h0) extra["tuple"] = mzv::to_string(mzv::to_exponent_tuple(w));
      extra["weight"] = mzv::weight(w);
      extra["in_H0"] = m.in_h0;
      extra["in_H23"] = m.in_h23;
      extra["in_Hgeq2"] = m.in_hgeq2;
      extra["in_yH"] = m.in_yh;
      std::string text = "letters=" + w.str() + " weight=" + std::to_string(mzv::weight(w));
      if (extra.contains("composition"))
        text += " composition=" + extra["composition"].get<std::string>() +
                " depth=" + std::to_string(extra["depth"].get<int>());
      if (extra.contains("tuple")) text += " tuple=" + extra["tuple"].get<std::string>();
      text += " " + membership_text(m);
      emit(g, "parse", parse_text, text, extra);
      return kExitOk;
    };
  });

  // convert
  std::string conv_word, conv_from = "auto", conv_to;
  auto* convert = app.add_subcommand("convert", "Convert between letter, composition, tuple, bracket and block encodings");
  convert->add_option("--word", conv_word, "Input object")->required();
  convert->add_option("--from", conv_from, "Input encoding")->check(CLI::IsMember({"auto", "tuple"}))->capture_default_str();
  convert->add_option("--to", conv_to, "Target encoding")
      ->check(CLI::IsMember({"word", "composition", "tuple", "bracket", "blocks"}))
      ->required();
  convert->callback([&] {
    action = [&] {
      mzv::Word w;
      if (conv_from == "tuple") {
        const auto parsed = mzv::parse_word(conv_word);
        const auto* k = std::get_if<mzv::Composition>(&parsed);
        if (!k) throw UsageError("--from tuple expects comma-separated entries");
        w = mzv::to_word(mzv::ExponentTuple{k->parts});
      } else {
        w = word_arg(conv_word);
      }
      std::string out;
      if (conv_to == "word")
        out = w.str();
      else if (conv_to == "composition")
        out = mzv::to_string(mzv::to_composition(w));
      else if (conv_to == "tuple")
        out = mzv::to_string(mzv::to_exponent_tuple(w));
      else if (conv_to == "bracket")
        out = mzv::to_string(mzv::to_bracket_form(w));
      else
        out = mzv::to_string(mzv::to_run_blocks(mzv::to_composition(w)));
      emit(g, "convert", conv_word, out);
      return kExitOk;
    };
  });

  // tau
  std::string tau_word;
  auto* tau = app.add_subcommand("tau", "Apply the anti-automorphism tau (x <-> y, reversed)");
  tau->add_option("--word", tau_word, "Word")->required();
  tau->callback([&] {
    action = [&] {
      const mzv::Word t = mzv::tau(word_arg(tau_word));
      emit(g, "tau", tau_word, mzv::word_label(t), json{{"letters", t.str()}});
      return kExitOk;
    };
  });

  // reverse
  std::string rev_word;
  auto* rev = app.add_subcommand("reverse", "Reverse a composition");
  rev->add_option("--word", rev_word, "Composition")->required();
  rev->callback([&] {
    action = [&] {
      emit(g, "reverse", rev_word, mzv::to_string(mzv::reverse(composition_arg(rev_word))));
      return kExitOk;
    };
  });

  // drop1
  std::string d_word;
  auto* d1 = app.add_subcommand("drop1", "Apply the drop-1 operator to a word of H^0");
  d1->add_option("--word", d_word, "Word")->required();
  d1->callback([&] {
    action = [&] {
      mzv::Drop1 engine(g.memo_cap);
      emit(g, "drop1", d_word, engine(word_arg(d_word)).str());
      return kExitOk;
    };
  });

  // star
  std::string s_w1, s_w2;
  auto* st = app.add_subcommand("star", "Star product of two words of H^{2,3}");
  st->add_option("--w1", s_w1, "Left word")->required();
  st->add_option("--w2", s_w2, "Right word")->required();
  st->callback([&] {
    action = [&] {
      emit(g, "star", s_w1 + " * " + s_w2, mzv::star(word_arg(s_w1), word_arg(s_w2)).str());
      return kExitOk;
    };
  });

  // shuffle
  std::string sh_u, sh_v;
  auto* sh = app.add_subcommand("shuffle", "Shuffle product of two words");
  sh->add_option("--u", sh_u, "Left word")->required();
  sh->add_option("--v", sh_v, "Right word")->required();
  sh->callback([&] {
    action = [&] {
      emit(g, "shuffle", sh_u + " sh " + sh_v, mzv::shuffle(word_arg(sh_u), word_arg(sh_v)).str());
      return kExitOk;
    };
  });

  // eval
  std::string e_word;
  std::optional<std::uint64_t> e_trunc, e_prime;
  bool e_exact = false;
  auto* ev = app.add_subcommand("eval", "Evaluate a truncated MZV (float or exact) or zeta_p mod p");
  ev->add_option("--word", e_word, "Composition")->required();
  auto* trunc_opt = ev->add_option("--trunc", e_trunc, "Truncation bound N (sum over n < N)")->check(CLI::PositiveNumber);
  auto* prime_opt = ev->add_option("--prime", e_prime, "Prime modulus");
  ev->add_flag("--exact", e_exact, "Exact rational partial sum")->needs(trunc_opt);
  trunc_opt->excludes(prime_opt);
  ev->callback([&] {
    action = [&] {
      const mzv::Composition k = composition_arg(e_word);
      if (e_prime) {
        const auto r = mzv::zeta_p_mod(k, *e_prime);
        emit(g, "eval", e_word, std::to_string(r.residue), json{{"prime", r.p}});
      } else if (e_trunc) {
        if (e_exact) {
          emit(g, "eval", e_word, rational_text(mzv::zeta_trunc_exact(k, *e_trunc)), json{{"N", *e_trunc}});
        } else {
          const auto v = mzv::zeta_trunc_float(k, *e_trunc);
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.17g", v.value);
          emit(g, "eval", e_word, buf, json{{"N", v.N}, {"tail_estimate", v.tail_estimate}});
        }
      } else {
        throw UsageError("eval needs --trunc N or --prime p");
      }
      return kExitOk;
    };
  });

  // diamond
  std::string dm_word;
  std::optional<std::uint64_t> dm_prime, dm_trunc;
  std::optional<int> dm_hoffman;
  auto* dm = app.add_subcommand("diamond", "Diamond-flat chain sum mod p, or the truncated diamond Hoffman instance");
  auto* dm_word_opt = dm->add_option("--word", dm_word, "Admissible composition (with --prime)");
  dm->add_option("--prime", dm_prime, "Prime modulus")->needs(dm_word_opt);
  auto* dm_h_opt = dm->add_option("--hoffman", dm_hoffman, "c for the instance (with --trunc)")->check(CLI::PositiveNumber);
  dm->add_option("--trunc", dm_trunc, "N for the instance")->needs(dm_h_opt);
  dm_word_opt->excludes(dm_h_opt);
  dm->callback([&] {
    action = [&] {
      if (dm_hoffman) {
        if (!dm_trunc) throw UsageError("diamond --hoffman needs --trunc N");
        const auto inst = mzv::hoffman_diamond_instance(*dm_hoffman, *dm_trunc);
        const std::string lhs = rational_text(inst.lhs), rhs = rational_text(inst.rhs);
        emit(g, "diamond", "c=" + std::to_string(*dm_hoffman) + " N=" + std::to_string(*dm_trunc),
             lhs + (inst.lhs == inst.rhs ? " == " : " != ") + rhs,
             json{{"lhs", lhs}, {"rhs", rhs}, {"equal", inst.lhs == inst.rhs}});
        return inst.lhs == inst.rhs ? kExitOk : kExitFailures;
      }
      if (!dm_prime || dm_word.empty()) throw UsageError("diamond needs --word k --prime p or --hoffman c --trunc N");
      const auto r = mzv::diamond_flat_p(composition_arg(dm_word), *dm_prime);
      emit(g, "diamond", dm_word, std::to_string(r.residue), json{{"prime", r.p}});
      return kExitOk;
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Run an exhaustive identity checker");
  check->require_subcommand(1);
  auto opts = [&] { return mzv::VerifyOptions{g.threads, g.memo_cap}; };

  int main_w = 12;
  auto* c_main = check->add_subcommand("main", "D(w1 tau(w2)) = w1 * w2 over H^{2,3} pairs");
  c_main->add_option("--max-weight", main_w, "Maximum wt(w1)+wt(w2)")->capture_default_str();
  c_main->callback([&] { action = [&] { return emit_report(g, mzv::check_main_theorem(main_w, opts())); }; });

  int ax_w = 12;
  auto* c_ax = check->add_subcommand("axioms", "Fixed points, tau invariance and idempotence of D");
  c_ax->add_option("--max-weight", ax_w, "Maximum weight")->capture_default_str();
  c_ax->callback([&] { action = [&] { return emit_report(g, mzv::check_drop1_axioms(ax_w, opts())); }; });

  int fa_a = 3, fa_b = 3, fa_c = 3;
  auto* c_fa = check->add_subcommand("families", "Three-term expansions of the (a,b,c) family");
  c_fa->add_option("--a-max", fa_a)->capture_default_str()->check(CLI::PositiveNumber);
  c_fa->add_option("--b-max", fa_b)->capture_default_str()->check(CLI::PositiveNumber);
  c_fa->add_option("--c-max", fa_c)->capture_default_str()->check(CLI::PositiveNumber);
  c_fa->callback([&] { action = [&] { return emit_report(g, mzv::check_hs_families(fa_a, fa_b, fa_c, opts())); }; });

  int fm_w = 8;
  std::string fm_primes = "11..199";
  std::optional<std::uint64_t> fm_bound;
  auto* c_fm = check->add_subcommand("fmzv", "Finite MZV reversal, shuffle and double-shuffle relations");
  c_fm->add_option("--max-weight", fm_w)->capture_default_str();
  c_fm->add_option("--primes", fm_primes, "Prime range lo..hi")->capture_default_str();
  c_fm->add_option("--small-prime-bound", fm_bound, "Failures at p <= bound are exceptions (default weight+1)");
  c_fm->callback([&] {
    action = [&] {
      return emit_report(g, mzv::check_fmzv(fm_w, parse_primes(fm_primes), fm_bound, opts()));
    };
  });

  int l41_w = 8;
  std::string l41_primes = "5..97";
  auto* c_l41 = check->add_subcommand("lemma41", "Diamond-flat chain sums against signed zeta_p");
  c_l41->add_option("--max-weight", l41_w)->capture_default_str();
  c_l41->add_option("--primes", l41_primes, "Prime range lo..hi")->capture_default_str();
  c_l41->callback([&] {
    action = [&] { return emit_report(g, mzv::check_lemma41(l41_w, parse_primes(l41_primes), opts())); };
  });

  int hd_c = 4;
  std::uint64_t hd_n = 40;
  auto* c_hd = check->add_subcommand("hoffman-diamond", "Exact truncated diamond instance over a (c, N) grid");
  c_hd->add_option("--c-max", hd_c)->capture_default_str()->check(CLI::PositiveNumber);
  c_hd->add_option("--n-max", hd_n)->capture_default_str()->check(CLI::PositiveNumber);
  c_hd->callback([&] { action = [&] { return emit_report(g, mzv::check_hoffman_diamond(hd_c, hd_n, opts())); }; });

  int ca_max = 5;
  auto* c_ca = check->add_subcommand("cancellation", "F(c,A,B) = 0 over brackets [a;b;1]");
  c_ca->add_option("--max-ab-sum", ca_max)->capture_default_str();
  c_ca->callback([&] { action = [&] { return emit_report(g, mzv::check_cancellation(ca_max, opts())); }; });

  // scan
  auto* scan = app.add_subcommand("scan", "Counterexample scans for open conjectures");
  scan->require_subcommand(1);
  int sc_w = 10;
  auto* s_conj = scan->add_subcommand("conjectures", "Fiber and image scans of D over H^0");
  s_conj->add_option("--max-weight", sc_w)->capture_default_str();
  s_conj->callback([&] {
    action = [&] {
      const auto rep = mzv::scan_conjectures(sc_w, opts());
      if (rep.status == mzv::Status::Fail)
        std::cerr << "mzvdrop: counterexample found -- this is a mathematical finding, see report\n";
      return emit_report(g, rep);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "mzvdrop: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const mzv::Error& e) {
    std::cerr << "mzvdrop: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "mzvdrop: " << e.what() << "\n";
  }
  return kExitUsage;
}
