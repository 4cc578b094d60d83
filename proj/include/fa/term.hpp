#pragma once

// Term AST over the signature S, 0, +, *, | |, half, #, plus variables.
// Nodes are immutable after construction and shared by pointer; every
// operation below treats them as values.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>

namespace fa {

enum class TermKind { Zero, Var, Succ, Add, Mul, Len, Half, Smash };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  TermKind kind;
  std::string name; // Var only
  TermPtr lhs;      // unary operand or left operand
  TermPtr rhs;      // right operand of Add/Mul/Smash

  Term(TermKind k, std::string n, TermPtr l, TermPtr r)
      : kind(k), name(std::move(n)), lhs(std::move(l)), rhs(std::move(r)) {}
};

inline TermPtr mk_zero() {
  static const TermPtr zero =
      std::make_shared<Term>(TermKind::Zero, "", nullptr, nullptr);
  return zero;
}

inline TermPtr mk_var(std::string name) {
  return std::make_shared<Term>(TermKind::Var, std::move(name), nullptr, nullptr);
}

inline TermPtr mk_succ(TermPtr t) {
  return std::make_shared<Term>(TermKind::Succ, "", std::move(t), nullptr);
}

inline TermPtr mk_add(TermPtr s, TermPtr t) {
  return std::make_shared<Term>(TermKind::Add, "", std::move(s), std::move(t));
}

inline TermPtr mk_mul(TermPtr s, TermPtr t) {
  return std::make_shared<Term>(TermKind::Mul, "", std::move(s), std::move(t));
}

inline TermPtr mk_len(TermPtr t) {
  return std::make_shared<Term>(TermKind::Len, "", std::move(t), nullptr);
}

inline TermPtr mk_half(TermPtr t) {
  return std::make_shared<Term>(TermKind::Half, "", std::move(t), nullptr);
}

inline TermPtr mk_smash(TermPtr s, TermPtr t) {
  return std::make_shared<Term>(TermKind::Smash, "", std::move(s), std::move(t));
}

// n as a Succ-chain over Zero; the language has no numeral leaf.
inline TermPtr mk_numeral(std::uint64_t n) {
  TermPtr t = mk_zero();
  for (std::uint64_t i = 0; i < n; ++i) t = mk_succ(t);
  return t;
}

inline bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::Zero: return true;
    case TermKind::Var: return a.name == b.name;
    case TermKind::Succ:
    case TermKind::Len:
    case TermKind::Half: return equal(*a.lhs, *b.lhs);
    case TermKind::Add:
    case TermKind::Mul:
    case TermKind::Smash:
      return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
  return false;
}

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind) {
    case TermKind::Zero: return;
    case TermKind::Var: out.insert(t.name); return;
    case TermKind::Succ:
    case TermKind::Len:
    case TermKind::Half: collect_vars(*t.lhs, out); return;
    case TermKind::Add:
    case TermKind::Mul:
    case TermKind::Smash:
      collect_vars(*t.lhs, out);
      collect_vars(*t.rhs, out);
      return;
  }
}

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

} // namespace fa
