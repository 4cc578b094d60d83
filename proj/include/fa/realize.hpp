#pragma once

// Realizability for Sigma^b_1 formulas.
//
// check_realizer implements the Rlz recursion: atoms ignore the realizer
// and are evaluated directly; a conjunction realizer carries a component
// per conjunct; a disjunction realizer is checked left slot first; a
// sharply bounded ALL y <= |t| needs a sequence of exactly |t|+1
// sub-realizers, component y+1 realizing the instance y; a bounded EX
// needs a 2-sequence <witness, sub-realizer> with witness <= the bound.
// NOT and IMPLIES are eliminated by nnf before the recursion starts, so
// a realizer's shape always follows the normalized formula. Structural
// defects in the realizer (not a sequence, wrong length, witness out of
// bounds) make the check false, never an error: a realizer can only
// certify a truth.
//
// build_realizer constructs the canonical realizer: 0 for a true atom,
// pairs for AND, a left-biased pair with 0 in the unused slot for OR,
// the full instance sequence for sharp ALL, and the least witness for a
// bounded EX. It succeeds exactly when the formula is true under the
// valuation, and its output always passes check_realizer.
//
// brute_truth is the independent classical evaluator (NOT and IMPLIES
// evaluated natively, no realizers, no normalization) used as the oracle
// everywhere.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fa/errors.hpp"
#include "fa/eval.hpp"
#include "fa/formula.hpp"
#include "fa/hierarchy.hpp"
#include "fa/nat.hpp"
#include "fa/seq.hpp"
#include "fa/term.hpp"

namespace fa {

namespace detail {

struct RealizeCtx {
  Valuation vals;
  CostMeter meter;

  RealizeCtx(const Valuation& v, const Budget& b) : vals(v), meter(b) {}

  // Semantic range limit of a quantifier: the bound's value, or its bit
  // length when the quantifier is sharp.
  Nat range_limit(const Formula& q) {
    Nat b = eval_term_rec(*q.bound, vals, meter);
    if (is_sharp_quantifier(q)) {
      meter.add_steps(b.bit_length() + 1);
      return Nat(b.bit_length());
    }
    return b;
  }

  std::optional<std::vector<Nat>> decode_charged(const Nat& r) {
    meter.add_steps(r.bit_length() + 1);
    meter.note_bits(r.bit_length());
    return decode_seq(r);
  }

  Realizer encode_charged(const std::vector<Nat>& items) {
    Realizer r = encode_seq(items, meter.budget());
    meter.add_steps(r.value.bit_length() + 1);
    meter.note_bits(r.value.bit_length());
    return r;
  }

  bool atom(const Formula& f) {
    return eval_atom(*f.t1, *f.t2, f.kind == FormulaKind::Leq, vals, meter);
  }

  void compare_step(const Nat& a, const Nat& b) {
    meter.add_steps(std::max(a.bit_length(), b.bit_length()) + 1);
  }
};

inline bool check_rec(const Formula& f, const Nat& r, RealizeCtx& ctx) {
  switch (f.kind) {
    case FormulaKind::Leq:
    case FormulaKind::Eq:
      return ctx.atom(f); // realizer content is irrelevant here
    case FormulaKind::And: {
      auto comps = ctx.decode_charged(r);
      if (!comps || comps->size() < 2) return false;
      return check_rec(*f.f1, (*comps)[0], ctx) && check_rec(*f.f2, (*comps)[1], ctx);
    }
    case FormulaKind::Or: {
      auto comps = ctx.decode_charged(r);
      if (!comps || comps->size() < 2) return false;
      return check_rec(*f.f1, (*comps)[0], ctx) || check_rec(*f.f2, (*comps)[1], ctx);
    }
    case FormulaKind::ForallSharp: {
      Nat limit = ctx.range_limit(f);
      auto comps = ctx.decode_charged(r);
      if (!comps) return false;
      std::uint64_t n = limit.to_u64(); // a bit length, always small
      if (comps->size() != n + 1) return false;
      ctx.vals.push(f.var, Nat());
      bool ok = true;
      for (std::uint64_t y = 0; y <= n && ok; ++y) {
        ctx.vals.top_value() = Nat(y);
        ok = check_rec(*f.f1, (*comps)[y], ctx);
      }
      ctx.vals.pop();
      return ok;
    }
    case FormulaKind::ExistsBounded:
    case FormulaKind::ExistsSharp: {
      Nat limit = ctx.range_limit(f);
      auto comps = ctx.decode_charged(r);
      if (!comps || comps->size() != 2) return false;
      const Nat& witness = (*comps)[0];
      ctx.compare_step(witness, limit);
      if (!(witness <= limit)) return false;
      ctx.vals.push(f.var, witness);
      bool ok = check_rec(*f.f1, (*comps)[1], ctx);
      ctx.vals.pop();
      return ok;
    }
    default:
      // NOT/IMPLIES are removed by nnf and a plain ALL cannot occur in a
      // normalized Sigma^b_1 formula.
      throw NotSigmaB1();
  }
}

inline std::optional<Nat> build_rec(const Formula& f, RealizeCtx& ctx) {
  switch (f.kind) {
    case FormulaKind::Leq:
    case FormulaKind::Eq:
      if (ctx.atom(f)) return Nat();
      return std::nullopt;
    case FormulaKind::And: {
      auto a = build_rec(*f.f1, ctx);
      if (!a) return std::nullopt;
      auto b = build_rec(*f.f2, ctx);
      if (!b) return std::nullopt;
      return ctx.encode_charged({*a, *b}).value;
    }
    case FormulaKind::Or: {
      if (auto a = build_rec(*f.f1, ctx)) return ctx.encode_charged({*a, Nat()}).value;
      if (auto b = build_rec(*f.f2, ctx)) return ctx.encode_charged({Nat(), *b}).value;
      return std::nullopt;
    }
    case FormulaKind::ForallSharp: {
      Nat limit = ctx.range_limit(f);
      std::uint64_t n = limit.to_u64();
      std::vector<Nat> comps;
      comps.reserve(static_cast<std::size_t>(n) + 1);
      ctx.vals.push(f.var, Nat());
      for (std::uint64_t y = 0; y <= n; ++y) {
        ctx.vals.top_value() = Nat(y);
        auto sub = build_rec(*f.f1, ctx);
        if (!sub) {
          ctx.vals.pop();
          return std::nullopt;
        }
        comps.push_back(std::move(*sub));
      }
      ctx.vals.pop();
      return ctx.encode_charged(comps).value;
    }
    case FormulaKind::ExistsBounded:
    case FormulaKind::ExistsSharp: {
      Nat limit = ctx.range_limit(f);
      ctx.vals.push(f.var, Nat());
      for (Nat w; w <= limit; ++w) {
        ctx.vals.top_value() = w;
        ctx.compare_step(w, limit);
        if (auto sub = build_rec(*f.f1, ctx)) {
          ctx.vals.pop();
          return ctx.encode_charged({w, *sub}).value;
        }
      }
      ctx.vals.pop();
      return std::nullopt;
    }
    default:
      throw NotSigmaB1();
  }
}

inline bool brute_rec(const Formula& f, RealizeCtx& ctx) {
  switch (f.kind) {
    case FormulaKind::Leq:
    case FormulaKind::Eq:
      return ctx.atom(f);
    case FormulaKind::And:
      return brute_rec(*f.f1, ctx) && brute_rec(*f.f2, ctx);
    case FormulaKind::Or:
      return brute_rec(*f.f1, ctx) || brute_rec(*f.f2, ctx);
    case FormulaKind::Not:
      return !brute_rec(*f.f1, ctx);
    case FormulaKind::Implies:
      return !brute_rec(*f.f1, ctx) || brute_rec(*f.f2, ctx);
    case FormulaKind::ExistsBounded:
    case FormulaKind::ExistsSharp: {
      Nat limit = ctx.range_limit(f);
      ctx.vals.push(f.var, Nat());
      bool found = false;
      for (Nat w; w <= limit && !found; ++w) {
        ctx.vals.top_value() = w;
        ctx.compare_step(w, limit);
        found = brute_rec(*f.f1, ctx);
      }
      ctx.vals.pop();
      return found;
    }
    case FormulaKind::ForallBounded:
    case FormulaKind::ForallSharp: {
      Nat limit = ctx.range_limit(f);
      ctx.vals.push(f.var, Nat());
      bool ok = true;
      for (Nat w; w <= limit && ok; ++w) {
        ctx.vals.top_value() = w;
        ctx.compare_step(w, limit);
        ok = brute_rec(*f.f1, ctx);
      }
      ctx.vals.pop();
      return ok;
    }
  }
  throw Error("unreachable formula kind");
}

} // namespace detail

inline std::pair<bool, CostReport> check_realizer(const FormulaPtr& f,
                                                  const Realizer& r,
                                                  const Valuation& v,
                                                  const Budget& b = Budget{}) {
  if (!classify(f).sigma_b1) throw NotSigmaB1();
  FormulaPtr n = nnf(f);
  detail::RealizeCtx ctx(v, b);
  bool ok = detail::check_rec(*n, r.value, ctx);
  return {ok, ctx.meter.report()};
}

inline std::pair<std::optional<Realizer>, CostReport> build_realizer(
    const FormulaPtr& f, const Valuation& v, const Budget& b = Budget{}) {
  if (!classify(f).sigma_b1) throw NotSigmaB1();
  FormulaPtr n = nnf(f);
  detail::RealizeCtx ctx(v, b);
  auto r = detail::build_rec(*n, ctx);
  if (!r) return {std::nullopt, ctx.meter.report()};
  return {Realizer(std::move(*r)), ctx.meter.report()};
}

// Classical truth in the standard model by direct recursive evaluation.
inline bool brute_truth(const FormulaPtr& f, const Valuation& v,
                        const Budget& b = Budget{}) {
  detail::RealizeCtx ctx(v, b);
  return detail::brute_rec(*f, ctx);
}

// Least output <= y_bound satisfying a Sigma^b_1 definition, i.e. the
// ground-level witnessing function of the definition. `params` supplies
// every free variable except the designated output.
inline std::optional<Nat> extract_function(const FormulaPtr& f,
                                           const std::string& output_var,
                                           const TermPtr& y_bound,
                                           const Valuation& params,
                                           const Budget& b = Budget{},
                                           CostReport* cost_out = nullptr) {
  if (!classify(f).sigma_b1) throw NotSigmaB1();
  for (const auto& name : free_vars(*f)) {
    if (name != output_var && !params.contains(name)) throw UnboundVariable(name);
  }
  detail::RealizeCtx ctx(params, b);
  std::optional<Nat> found;
  Nat limit = detail::eval_term_rec(*y_bound, ctx.vals, ctx.meter);
  ctx.vals.push(output_var, Nat());
  for (Nat w; w <= limit; ++w) {
    ctx.vals.top_value() = w;
    ctx.compare_step(w, limit);
    if (detail::brute_rec(*f, ctx)) {
      found = w;
      break;
    }
  }
  ctx.vals.pop();
  if (cost_out) *cost_out = ctx.meter.report();
  return found;
}

inline std::optional<Nat> extract_function(const FormulaPtr& f,
                                           const std::string& input_var,
                                           const Nat& input_value,
                                           const std::string& output_var,
                                           const TermPtr& y_bound,
                                           const Budget& b = Budget{},
                                           CostReport* cost_out = nullptr) {
  Valuation params;
  params.set(input_var, input_value);
  return extract_function(f, output_var, y_bound, params, b, cost_out);
}

} // namespace fa
