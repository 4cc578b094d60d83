#pragma once

// Deterministic corpora of Sigma^b_1 formulas for property testing, and
// the exhaustive agreement harness used by the invariant suites.
//
// Generation is grammar-directed so that every emitted formula is
// Sigma^b_1 by construction, and stratified in a fixed 10-slot cycle so
// that any window of 100 formulas contains at least 20 sharply bounded
// formulas, 20 with a Sigma-only classification, and 20 using NOT or
// IMPLIES. Quantifier bounds are variables or small literals (never a
// term mentioning the quantified variable), free variables come from the
// fixed pool {u, w}, and binder names are fresh per formula, so corpus
// formulas are always renamed apart. Plain bounded quantifiers nested
// under another plain quantifier get tiny literal bounds to keep the
// brute-force sweeps tractable.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fa/errors.hpp"
#include "fa/eval.hpp"
#include "fa/formula.hpp"
#include "fa/hierarchy.hpp"
#include "fa/parse.hpp"
#include "fa/pretty.hpp"
#include "fa/realize.hpp"
#include "fa/term.hpp"

namespace fa {

struct CorpusSpec {
  std::uint64_t seed = 1;
  int max_depth = 5;
  std::uint64_t max_bound_value = 64;
  int count = 0;
};

struct CorpusEntry {
  FormulaPtr formula;
  FormulaClass cls;
};

namespace detail {

class CorpusGen {
public:
  explicit CorpusGen(const CorpusSpec& spec) : spec_(spec), eng_(spec.seed) {}

  std::vector<CorpusEntry> run() {
    std::vector<CorpusEntry> out;
    out.reserve(static_cast<std::size_t>(spec_.count < 0 ? 0 : spec_.count));
    for (int i = 0; i < spec_.count; ++i) {
      scope_.clear();
      next_binder_ = 0;
      switch (roll(3)) {
        case 0: break;
        case 1: scope_.push_back("u"); break;
        default:
          scope_.push_back("u");
          scope_.push_back("w");
          break;
      }
      FormulaPtr f;
      switch (i % 10) {
        case 0:
        case 5: f = gen_delta0(1 + roll(3)); break;
        case 1:
        case 6: f = gen_sigma_only(); break;
        case 2:
        case 7: f = gen_neg_imp(); break;
        default: f = gen_sigma(depth(), 0); break;
      }
      out.push_back(CorpusEntry{f, classify(f)});
    }
    return out;
  }

private:
  std::uint64_t roll(std::uint64_t n) { return eng_() % n; }
  int depth() { return 1 + static_cast<int>(roll(static_cast<std::uint64_t>(
                        spec_.max_depth < 1 ? 1 : spec_.max_depth))); }

  std::string fresh_binder() { return "b" + std::to_string(next_binder_++); }

  TermPtr gen_term(int d, bool smash_ok) {
    if (d <= 0 || roll(100) < 25) {
      if (!scope_.empty() && roll(100) < 60)
        return mk_var(scope_[roll(scope_.size())]);
      return mk_numeral(roll(4));
    }
    switch (roll(smash_ok ? 6 : 5)) {
      case 0: return mk_succ(gen_term(d - 1, smash_ok));
      case 1: return mk_add(gen_term(d - 1, smash_ok), gen_term(d - 1, smash_ok));
      case 2: return mk_mul(gen_term(d - 1, smash_ok), gen_term(d - 1, smash_ok));
      case 3: return mk_len(gen_term(d - 1, smash_ok));
      case 4: return mk_half(gen_term(d - 1, smash_ok));
      // At most one smash per branch keeps every evaluation far below the
      // default bit budget.
      default: return mk_smash(gen_term(d - 1, false), gen_term(d - 1, false));
    }
  }

  FormulaPtr gen_atom() {
    TermPtr s = gen_term(static_cast<int>(roll(4)), true);
    TermPtr t = gen_term(static_cast<int>(roll(4)), true);
    return roll(2) == 0 ? mk_leq(s, t) : mk_eq(s, t);
  }

  // Bounds are variables or literals; nested plain quantifiers get tiny
  // literals so sweeps stay cheap.
  TermPtr gen_bound(int plain_nesting) {
    if (plain_nesting == 0) {
      if (!scope_.empty() && roll(100) < 40)
        return mk_var(scope_[roll(scope_.size())]);
      if (roll(100) < 5) return mk_numeral(1 + roll(spec_.max_bound_value));
      return mk_numeral(roll(13));
    }
    return mk_numeral(roll(7));
  }

  template <typename Gen>
  FormulaPtr quantified(bool exists, bool sharp, int plain_nesting, Gen&& body) {
    TermPtr bound = gen_bound(sharp ? 0 : plain_nesting);
    std::string var = fresh_binder();
    scope_.push_back(var);
    FormulaPtr inner = body();
    scope_.pop_back();
    FormulaKind kind = exists ? (sharp ? FormulaKind::ExistsSharp
                                       : FormulaKind::ExistsBounded)
                              : (sharp ? FormulaKind::ForallSharp
                                       : FormulaKind::ForallBounded);
    return std::make_shared<Formula>(kind, nullptr, nullptr, inner, nullptr, var,
                                     bound);
  }

  FormulaPtr gen_delta0(int d) {
    if (d <= 0) return gen_atom();
    std::uint64_t c = roll(100);
    if (c < 35) return gen_atom();
    if (c < 50) return mk_and(gen_delta0(d - 1), gen_delta0(d - 1));
    if (c < 65) return mk_or(gen_delta0(d - 1), gen_delta0(d - 1));
    if (c < 77) return quantified(false, true, 0, [&] { return gen_delta0(d - 1); });
    if (c < 89) return quantified(true, true, 0, [&] { return gen_delta0(d - 1); });
    return mk_not(gen_delta0(d - 1));
  }

  FormulaPtr gen_sigma(int d, int plain_nesting) {
    if (d <= 0) return gen_atom();
    std::uint64_t c = roll(100);
    if (c < 20) return gen_atom();
    if (c < 35)
      return mk_and(gen_sigma(d - 1, plain_nesting), gen_sigma(d - 1, plain_nesting));
    if (c < 50)
      return mk_or(gen_sigma(d - 1, plain_nesting), gen_sigma(d - 1, plain_nesting));
    if (c < 70)
      return quantified(true, false, plain_nesting,
                        [&] { return gen_sigma(d - 1, plain_nesting + 1); });
    if (c < 80)
      return quantified(false, true, plain_nesting,
                        [&] { return gen_sigma(d - 1, plain_nesting); });
    if (c < 85)
      return quantified(true, true, plain_nesting,
                        [&] { return gen_sigma(d - 1, plain_nesting); });
    if (c < 93) return mk_not(gen_pi(d - 1, plain_nesting));
    return mk_implies(gen_pi(d - 1, plain_nesting), gen_sigma(d - 1, plain_nesting));
  }

  FormulaPtr gen_pi(int d, int plain_nesting) {
    if (d <= 0) return gen_atom();
    std::uint64_t c = roll(100);
    if (c < 20) return gen_atom();
    if (c < 35)
      return mk_and(gen_pi(d - 1, plain_nesting), gen_pi(d - 1, plain_nesting));
    if (c < 50)
      return mk_or(gen_pi(d - 1, plain_nesting), gen_pi(d - 1, plain_nesting));
    if (c < 70)
      return quantified(false, false, plain_nesting,
                        [&] { return gen_pi(d - 1, plain_nesting + 1); });
    if (c < 80)
      return quantified(true, true, plain_nesting,
                        [&] { return gen_pi(d - 1, plain_nesting); });
    if (c < 85)
      return quantified(false, true, plain_nesting,
                        [&] { return gen_pi(d - 1, plain_nesting); });
    if (c < 93) return mk_not(gen_sigma(d - 1, plain_nesting));
    return mk_implies(gen_sigma(d - 1, plain_nesting), gen_pi(d - 1, plain_nesting));
  }

  // Guaranteed sigma_b1 and not pi_b1: a plain bounded EX at the root.
  FormulaPtr gen_sigma_only() {
    return quantified(true, false, 0, [&] { return gen_sigma(depth() - 1, 1); });
  }

  // Guaranteed to use NOT or IMPLIES at the root, still Sigma^b_1.
  FormulaPtr gen_neg_imp() {
    int d = depth();
    if (roll(2) == 0) return mk_not(gen_pi(d - 1, 0));
    return mk_implies(gen_pi(d - 1, 0), gen_sigma(d - 1, 0));
  }

  CorpusSpec spec_;
  std::mt19937_64 eng_;
  std::vector<std::string> scope_;
  int next_binder_ = 0;
};

} // namespace detail

inline std::vector<CorpusEntry> generate(const CorpusSpec& spec) {
  return detail::CorpusGen(spec).run();
}

// True iff for every valuation of the free variables with values up to
// value_cap: build_realizer succeeds exactly when brute_truth holds, and
// a built realizer is accepted by check_realizer.
inline bool exhaustive_agreement(const FormulaPtr& f, const Nat& value_cap,
                                 const Budget& b = Budget{}) {
  if (!classify(f).sigma_b1) throw NotSigmaB1();
  if (!value_cap.fits_u64())
    throw MalformedInstance("value cap too large for an exhaustive sweep");
  std::uint64_t cap = value_cap.to_u64();
  std::vector<std::string> names;
  for (const auto& n : free_vars(*f)) names.push_back(n);
  std::vector<std::uint64_t> vals(names.size(), 0);
  for (;;) {
    Valuation v;
    for (std::size_t i = 0; i < names.size(); ++i) v.set(names[i], Nat(vals[i]));
    bool truth = brute_truth(f, v, b);
    auto built = build_realizer(f, v, b);
    if (built.first.has_value() != truth) return false;
    if (built.first && !check_realizer(f, *built.first, v, b).first) return false;
    std::size_t i = 0;
    while (i < vals.size() && ++vals[i] > cap) vals[i++] = 0;
    if (i == vals.size()) break;
  }
  return true;
}

// One formula per line; the header comment carries the generating spec.
inline std::string corpus_to_text(const std::vector<CorpusEntry>& entries,
                                  const CorpusSpec& spec) {
  std::ostringstream out;
  out << "# corpus seed=" << spec.seed << " max_depth=" << spec.max_depth
      << " max_bound=" << spec.max_bound_value << " count=" << entries.size()
      << "\n";
  for (const auto& e : entries) out << pretty(e.formula) << "\n";
  return out.str();
}

inline std::vector<CorpusEntry> corpus_from_text(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    FormulaPtr f = parse_formula(line);
    out.push_back(CorpusEntry{f, classify(f)});
  }
  return out;
}

} // namespace fa
