#pragma once

// Printers for terms and formulas in the ASCII surface grammar. Output
// re-parses to a structurally identical tree: parentheses are emitted
// exactly where the precedence table requires them, maximal Succ-chains
// over 0 fold back into decimal numerals, and sharp quantifiers print
// their bound inside length bars.

#include <cstdint>
#include <optional>
#include <string>

#include "fa/formula.hpp"
#include "fa/term.hpp"

namespace fa {

namespace detail {

// Term precedence: + (0) < * (1) < # (2) < primary (3).
inline int term_prec(TermKind k) {
  switch (k) {
    case TermKind::Add: return 0;
    case TermKind::Mul: return 1;
    case TermKind::Smash: return 2;
    default: return 3;
  }
}

inline std::optional<std::uint64_t> numeral_value(const Term& t) {
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (cur->kind == TermKind::Succ) {
    ++n;
    cur = cur->lhs.get();
  }
  if (cur->kind != TermKind::Zero) return std::nullopt;
  return n;
}

inline void print_term(const Term& t, int required, std::string& out) {
  if (auto n = numeral_value(t)) {
    out += std::to_string(*n);
    return;
  }
  int prec = term_prec(t.kind);
  bool parens = prec < required;
  if (parens) out += '(';
  switch (t.kind) {
    case TermKind::Zero: out += '0'; break;
    case TermKind::Var: out += t.name; break;
    case TermKind::Succ:
      out += "S(";
      print_term(*t.lhs, 0, out);
      out += ')';
      break;
    case TermKind::Half:
      out += "half(";
      print_term(*t.lhs, 0, out);
      out += ')';
      break;
    case TermKind::Len:
      out += '|';
      print_term(*t.lhs, 0, out);
      out += '|';
      break;
    case TermKind::Add:
      print_term(*t.lhs, 0, out);
      out += " + ";
      print_term(*t.rhs, 1, out);
      break;
    case TermKind::Mul:
      print_term(*t.lhs, 1, out);
      out += " * ";
      print_term(*t.rhs, 2, out);
      break;
    case TermKind::Smash:
      print_term(*t.lhs, 2, out);
      out += " # ";
      print_term(*t.rhs, 3, out);
      break;
  }
  if (parens) out += ')';
}

// Formula precedence: IMPLIES (0) < OR (1) < AND (2) < NOT/atom (3).
// Quantifier bodies extend maximally right, so a quantifier prints bare
// only where nothing may follow it (required 0).
inline void print_formula(const Formula& f, int required, std::string& out) {
  switch (f.kind) {
    case FormulaKind::Leq:
      print_term(*f.t1, 0, out);
      out += " <= ";
      print_term(*f.t2, 0, out);
      return;
    case FormulaKind::Eq:
      print_term(*f.t1, 0, out);
      out += " = ";
      print_term(*f.t2, 0, out);
      return;
    case FormulaKind::Not:
      out += "NOT ";
      print_formula(*f.f1, 3, out);
      return;
    case FormulaKind::And: {
      bool parens = 2 < required;
      if (parens) out += '(';
      print_formula(*f.f1, 2, out);
      out += " AND ";
      print_formula(*f.f2, 3, out);
      if (parens) out += ')';
      return;
    }
    case FormulaKind::Or: {
      bool parens = 1 < required;
      if (parens) out += '(';
      print_formula(*f.f1, 1, out);
      out += " OR ";
      print_formula(*f.f2, 2, out);
      if (parens) out += ')';
      return;
    }
    case FormulaKind::Implies: {
      bool parens = 0 < required;
      if (parens) out += '(';
      print_formula(*f.f1, 1, out);
      out += " IMPLIES ";
      print_formula(*f.f2, 0, out);
      if (parens) out += ')';
      return;
    }
    case FormulaKind::ExistsBounded:
    case FormulaKind::ForallBounded:
    case FormulaKind::ExistsSharp:
    case FormulaKind::ForallSharp: {
      bool parens = 0 < required;
      if (parens) out += '(';
      bool exists = f.kind == FormulaKind::ExistsBounded ||
                    f.kind == FormulaKind::ExistsSharp;
      out += exists ? "EX " : "ALL ";
      out += f.var;
      out += " <= ";
      if (is_sharp_quantifier(f)) {
        out += '|';
        print_term(*f.bound, 0, out);
        out += '|';
      } else {
        print_term(*f.bound, 0, out);
      }
      out += " . ";
      print_formula(*f.f1, 0, out);
      if (parens) out += ')';
      return;
    }
  }
}

} // namespace detail

inline std::string pretty(const Term& t) {
  std::string out;
  detail::print_term(t, 0, out);
  return out;
}

inline std::string pretty(const Formula& f) {
  std::string out;
  detail::print_formula(f, 0, out);
  return out;
}

inline std::string pretty(const TermPtr& t) { return pretty(*t); }
inline std::string pretty(const FormulaPtr& f) { return pretty(*f); }

} // namespace fa
