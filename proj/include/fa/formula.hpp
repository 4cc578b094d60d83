#pragma once

// Formula AST: atomic <= and = over terms, the connectives, and bounded /
// sharply bounded quantifiers. A quantifier is sharp exactly when it was
// written with a length bound (EX y <= |t| . ...); the stored bound is the
// term under the length bars, so the semantic range of a sharp quantifier
// is 0..|eval(bound)|. The quantifier factories canonicalize: a plain
// bounded quantifier whose bound is syntactically |t| becomes the sharp
// form, keeping the representation unambiguous under print/parse.

#include <memory>
#include <set>
#include <string>
#include <utility>

#include "fa/term.hpp"

namespace fa {

enum class FormulaKind {
  Leq,
  Eq,
  And,
  Or,
  Not,
  Implies,
  ExistsBounded,
  ForallBounded,
  ExistsSharp,
  ForallSharp
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
  FormulaKind kind;
  TermPtr t1, t2;      // atom operands
  FormulaPtr f1, f2;   // connective operands (f1 only for Not; f1 = body for quantifiers)
  std::string var;     // quantified variable
  TermPtr bound;       // quantifier bound term (under the bars when sharp)

  Formula(FormulaKind k, TermPtr a, TermPtr b, FormulaPtr l, FormulaPtr r,
          std::string v, TermPtr bnd)
      : kind(k), t1(std::move(a)), t2(std::move(b)), f1(std::move(l)),
        f2(std::move(r)), var(std::move(v)), bound(std::move(bnd)) {}
};

inline FormulaPtr mk_leq(TermPtr s, TermPtr t) {
  return std::make_shared<Formula>(FormulaKind::Leq, std::move(s), std::move(t),
                                   nullptr, nullptr, "", nullptr);
}

inline FormulaPtr mk_eq(TermPtr s, TermPtr t) {
  return std::make_shared<Formula>(FormulaKind::Eq, std::move(s), std::move(t),
                                   nullptr, nullptr, "", nullptr);
}

inline FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(FormulaKind::And, nullptr, nullptr,
                                   std::move(a), std::move(b), "", nullptr);
}

inline FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(FormulaKind::Or, nullptr, nullptr,
                                   std::move(a), std::move(b), "", nullptr);
}

inline FormulaPtr mk_not(FormulaPtr a) {
  return std::make_shared<Formula>(FormulaKind::Not, nullptr, nullptr,
                                   std::move(a), nullptr, "", nullptr);
}

inline FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(FormulaKind::Implies, nullptr, nullptr,
                                   std::move(a), std::move(b), "", nullptr);
}

namespace detail {
inline FormulaPtr mk_quant(FormulaKind plain, FormulaKind sharp, std::string var,
                           TermPtr bound, FormulaPtr body) {
  if (bound->kind == TermKind::Len)
    return std::make_shared<Formula>(sharp, nullptr, nullptr, std::move(body),
                                     nullptr, std::move(var), bound->lhs);
  return std::make_shared<Formula>(plain, nullptr, nullptr, std::move(body),
                                   nullptr, std::move(var), std::move(bound));
}
} // namespace detail

inline FormulaPtr mk_exists_bounded(std::string var, TermPtr bound, FormulaPtr body) {
  return detail::mk_quant(FormulaKind::ExistsBounded, FormulaKind::ExistsSharp,
                          std::move(var), std::move(bound), std::move(body));
}

inline FormulaPtr mk_forall_bounded(std::string var, TermPtr bound, FormulaPtr body) {
  return detail::mk_quant(FormulaKind::ForallBounded, FormulaKind::ForallSharp,
                          std::move(var), std::move(bound), std::move(body));
}

inline FormulaPtr mk_exists_sharp(std::string var, TermPtr bound, FormulaPtr body) {
  return std::make_shared<Formula>(FormulaKind::ExistsSharp, nullptr, nullptr,
                                   std::move(body), nullptr, std::move(var),
                                   std::move(bound));
}

inline FormulaPtr mk_forall_sharp(std::string var, TermPtr bound, FormulaPtr body) {
  return std::make_shared<Formula>(FormulaKind::ForallSharp, nullptr, nullptr,
                                   std::move(body), nullptr, std::move(var),
                                   std::move(bound));
}

inline bool is_atom(const Formula& f) {
  return f.kind == FormulaKind::Leq || f.kind == FormulaKind::Eq;
}

inline bool is_quantifier(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::ExistsBounded:
    case FormulaKind::ForallBounded:
    case FormulaKind::ExistsSharp:
    case FormulaKind::ForallSharp: return true;
    default: return false;
  }
}

inline bool is_sharp_quantifier(const Formula& f) {
  return f.kind == FormulaKind::ExistsSharp || f.kind == FormulaKind::ForallSharp;
}

inline bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  if (is_atom(a)) return equal(*a.t1, *b.t1) && equal(*a.t2, *b.t2);
  if (is_quantifier(a))
    return a.var == b.var && equal(*a.bound, *b.bound) && equal(*a.f1, *b.f1);
  if (a.kind == FormulaKind::Not) return equal(*a.f1, *b.f1);
  return equal(*a.f1, *b.f1) && equal(*a.f2, *b.f2);
}

namespace detail {
inline void collect_free(const Formula& f, std::set<std::string>& bound_here,
                         std::set<std::string>& out) {
  if (is_atom(f)) {
    std::set<std::string> vs;
    collect_vars(*f.t1, vs);
    collect_vars(*f.t2, vs);
    for (const auto& v : vs)
      if (!bound_here.count(v)) out.insert(v);
    return;
  }
  if (is_quantifier(f)) {
    // The bound term is evaluated outside the binder's scope.
    std::set<std::string> vs;
    collect_vars(*f.bound, vs);
    for (const auto& v : vs)
      if (!bound_here.count(v)) out.insert(v);
    bool fresh = bound_here.insert(f.var).second;
    collect_free(*f.f1, bound_here, out);
    if (fresh) bound_here.erase(f.var);
    return;
  }
  collect_free(*f.f1, bound_here, out);
  if (f.f2) collect_free(*f.f2, bound_here, out);
}
} // namespace detail

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound_here, out;
  detail::collect_free(f, bound_here, out);
  return out;
}

// True when no binder shadows another binder or a free variable; the
// parser establishes this and the generators maintain it.
inline bool renamed_apart(const Formula& f) {
  std::set<std::string> seen = free_vars(f);
  bool ok = true;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (!ok || is_atom(g)) return;
    if (is_quantifier(g)) {
      if (!seen.insert(g.var).second) ok = false;
      self(self, *g.f1);
      return;
    }
    self(self, *g.f1);
    if (g.f2) self(self, *g.f2);
  };
  walk(walk, f);
  return ok;
}

} // namespace fa
