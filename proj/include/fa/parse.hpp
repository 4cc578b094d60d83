#pragma once

// Recursive-descent parser for the ASCII surface grammar.
//
//   term    := "0" | numeral | ident | "S(" term ")" | "half(" term ")"
//            | "|" term "|" | term "#" term | term "*" term | term "+" term
//            | "(" term ")"
//   atom    := term "<=" term | term "=" term
//   formula := atom | "NOT" formula | formula "AND" formula
//            | formula "OR" formula | formula "IMPLIES" formula
//            | ("EX"|"ALL") ident "<=" term "." formula | "(" formula ")"
//
// Precedence: | | and half bind tightest, then # > * > +; NOT > AND > OR
// > IMPLIES; a quantifier body extends maximally to the right. Decimal
// numerals abbreviate Succ-chains over 0. After parsing, bound variables
// are renamed apart (appending apostrophes), so no binder shadows another
// binder or a free variable; shadowing in the input is not an error.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fa/errors.hpp"
#include "fa/formula.hpp"
#include "fa/term.hpp"

namespace fa {

namespace detail {

enum class Tok {
  LParen, RParen, Bar, Hash, Star, Plus, Leq, Eq, Dot,
  KwS, KwHalf, KwEx, KwAll, KwNot, KwAnd, KwOr, KwImplies,
  Ident, Numeral, End
};

struct Token {
  Tok type;
  std::string text;
  std::uint64_t value = 0;
  int line = 1;
  int column = 1;
};

constexpr std::uint64_t kMaxNumeral = 65536; // numerals expand to unary Succ-chains

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok t, std::string text, int l, int c, std::uint64_t v = 0) {
    out.push_back(Token{t, std::move(text), v, l, c});
  };
  while (i < src.size()) {
    char c = src[i];
    int tl = line, tc = col;
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '(') { push(Tok::LParen, "(", tl, tc); ++i; ++col; continue; }
    if (c == ')') { push(Tok::RParen, ")", tl, tc); ++i; ++col; continue; }
    if (c == '|') { push(Tok::Bar, "|", tl, tc); ++i; ++col; continue; }
    if (c == '#') { push(Tok::Hash, "#", tl, tc); ++i; ++col; continue; }
    if (c == '*') { push(Tok::Star, "*", tl, tc); ++i; ++col; continue; }
    if (c == '+') { push(Tok::Plus, "+", tl, tc); ++i; ++col; continue; }
    if (c == '.') { push(Tok::Dot, ".", tl, tc); ++i; ++col; continue; }
    if (c == '=') { push(Tok::Eq, "=", tl, tc); ++i; ++col; continue; }
    if (c == '<') {
      if (i + 1 < src.size() && src[i + 1] == '=') {
        push(Tok::Leq, "<=", tl, tc);
        i += 2;
        col += 2;
        continue;
      }
      throw SyntaxError("expected '<='", tl, tc);
    }
    if (c >= '0' && c <= '9') {
      std::uint64_t v = 0;
      std::size_t start = i;
      while (i < src.size() && src[i] >= '0' && src[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(src[i] - '0');
        if (v > kMaxNumeral)
          throw SyntaxError("numeral too large (max 65536)", tl, tc);
        ++i;
        ++col;
      }
      push(Tok::Numeral, std::string(src.substr(start, i - start)), tl, tc, v);
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t start = i;
      while (i < src.size() &&
             ((src[i] >= 'a' && src[i] <= 'z') || (src[i] >= 'A' && src[i] <= 'Z') ||
              (src[i] >= '0' && src[i] <= '9') || src[i] == '_' || src[i] == '\'')) {
        ++i;
        ++col;
      }
      std::string word(src.substr(start, i - start));
      if (word == "S") push(Tok::KwS, word, tl, tc);
      else if (word == "half") push(Tok::KwHalf, word, tl, tc);
      else if (word == "EX") push(Tok::KwEx, word, tl, tc);
      else if (word == "ALL") push(Tok::KwAll, word, tl, tc);
      else if (word == "NOT") push(Tok::KwNot, word, tl, tc);
      else if (word == "AND") push(Tok::KwAnd, word, tl, tc);
      else if (word == "OR") push(Tok::KwOr, word, tl, tc);
      else if (word == "IMPLIES") push(Tok::KwImplies, word, tl, tc);
      else push(Tok::Ident, word, tl, tc);
      continue;
    }
    throw SyntaxError(std::string("unknown symbol '") + c + "'", tl, tc);
  }
  push(Tok::End, "", line, col);
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  TermPtr term() {
    TermPtr t = add();
    expect(Tok::End, "end of input");
    return t;
  }

  FormulaPtr formula() {
    FormulaPtr f = implies();
    expect(Tok::End, "end of input");
    return f;
  }

private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok t) const { return cur().type == t; }
  const Token& take() { return toks_[pos_++]; }

  void expect(Tok t, const char* what) {
    if (!at(t))
      throw SyntaxError(std::string("expected ") + what + ", found '" +
                            (cur().type == Tok::End ? "end of input" : cur().text) + "'",
                        cur().line, cur().column);
    if (t != Tok::End) ++pos_;
  }

  TermPtr add() {
    TermPtr t = mul();
    while (at(Tok::Plus)) {
      take();
      t = mk_add(t, mul());
    }
    return t;
  }

  TermPtr mul() {
    TermPtr t = smash();
    while (at(Tok::Star)) {
      take();
      t = mk_mul(t, smash());
    }
    return t;
  }

  TermPtr smash() {
    TermPtr t = primary();
    while (at(Tok::Hash)) {
      take();
      t = mk_smash(t, primary());
    }
    return t;
  }

  TermPtr primary() {
    switch (cur().type) {
      case Tok::Numeral: return mk_numeral(take().value);
      case Tok::Ident: return mk_var(take().text);
      case Tok::KwS: {
        take();
        expect(Tok::LParen, "'('");
        TermPtr t = add();
        expect(Tok::RParen, "')'");
        return mk_succ(t);
      }
      case Tok::KwHalf: {
        take();
        expect(Tok::LParen, "'('");
        TermPtr t = add();
        expect(Tok::RParen, "')'");
        return mk_half(t);
      }
      case Tok::Bar: {
        take();
        TermPtr t = add();
        expect(Tok::Bar, "closing '|'");
        return mk_len(t);
      }
      case Tok::LParen: {
        take();
        TermPtr t = add();
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        throw SyntaxError("expected a term, found '" +
                              (cur().type == Tok::End ? "end of input" : cur().text) + "'",
                          cur().line, cur().column);
    }
  }

  FormulaPtr implies() {
    FormulaPtr l = disj();
    if (at(Tok::KwImplies)) {
      take();
      return mk_implies(l, implies());
    }
    return l;
  }

  FormulaPtr disj() {
    FormulaPtr l = conj();
    while (at(Tok::KwOr)) {
      take();
      l = mk_or(l, conj());
    }
    return l;
  }

  FormulaPtr conj() {
    FormulaPtr l = unary();
    while (at(Tok::KwAnd)) {
      take();
      l = mk_and(l, unary());
    }
    return l;
  }

  FormulaPtr unary() {
    if (at(Tok::KwNot)) {
      take();
      return mk_not(unary());
    }
    if (at(Tok::KwEx) || at(Tok::KwAll)) {
      bool exists = take().type == Tok::KwEx;
      if (!at(Tok::Ident))
        throw SyntaxError("expected a variable after quantifier", cur().line,
                          cur().column);
      std::string var = take().text;
      expect(Tok::Leq, "'<='");
      TermPtr bnd = add();
      expect(Tok::Dot, "'.'");
      FormulaPtr body = implies();
      return exists ? mk_exists_bounded(var, bnd, body)
                    : mk_forall_bounded(var, bnd, body);
    }
    // An atom and a parenthesized formula both may start with '('; try the
    // atom first and fall back.
    std::size_t save = pos_;
    try {
      TermPtr s = add();
      if (at(Tok::Leq) || at(Tok::Eq)) {
        bool leq = take().type == Tok::Leq;
        TermPtr t = add();
        return leq ? mk_leq(s, t) : mk_eq(s, t);
      }
      throw SyntaxError("expected '<=' or '=' after term, found '" +
                            (cur().type == Tok::End ? "end of input" : cur().text) + "'",
                        cur().line, cur().column);
    } catch (const SyntaxError&) {
      if (toks_[save].type != Tok::LParen) throw;
      pos_ = save;
    }
    take(); // '('
    FormulaPtr f = implies();
    expect(Tok::RParen, "')'");
    return f;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Rebuild a term renaming variables through the active binder scope.
inline TermPtr rename_term(const TermPtr& t,
                           const std::map<std::string, std::string>& scope) {
  switch (t->kind) {
    case TermKind::Zero: return t;
    case TermKind::Var: {
      auto it = scope.find(t->name);
      return it == scope.end() ? t : mk_var(it->second);
    }
    case TermKind::Succ: return mk_succ(rename_term(t->lhs, scope));
    case TermKind::Len: return mk_len(rename_term(t->lhs, scope));
    case TermKind::Half: return mk_half(rename_term(t->lhs, scope));
    case TermKind::Add:
      return mk_add(rename_term(t->lhs, scope), rename_term(t->rhs, scope));
    case TermKind::Mul:
      return mk_mul(rename_term(t->lhs, scope), rename_term(t->rhs, scope));
    case TermKind::Smash:
      return mk_smash(rename_term(t->lhs, scope), rename_term(t->rhs, scope));
  }
  return t;
}

inline FormulaPtr rename_apart_rec(const FormulaPtr& f,
                                   std::map<std::string, std::string>& scope,
                                   std::set<std::string>& used) {
  if (is_atom(*f)) {
    TermPtr a = rename_term(f->t1, scope);
    TermPtr b = rename_term(f->t2, scope);
    return f->kind == FormulaKind::Leq ? mk_leq(a, b) : mk_eq(a, b);
  }
  if (is_quantifier(*f)) {
    // Bound terms live in the enclosing scope.
    TermPtr bnd = rename_term(f->bound, scope);
    std::string fresh = f->var;
    while (used.count(fresh)) fresh += '\'';
    used.insert(fresh);
    auto old = scope.find(f->var);
    std::string prev;
    bool had = old != scope.end();
    if (had) prev = old->second;
    scope[f->var] = fresh;
    FormulaPtr body = rename_apart_rec(f->f1, scope, used);
    if (had) scope[f->var] = prev; else scope.erase(f->var);
    return std::make_shared<Formula>(f->kind, nullptr, nullptr, body, nullptr,
                                     fresh, bnd);
  }
  FormulaPtr l = rename_apart_rec(f->f1, scope, used);
  if (f->kind == FormulaKind::Not) return mk_not(l);
  FormulaPtr r = rename_apart_rec(f->f2, scope, used);
  switch (f->kind) {
    case FormulaKind::And: return mk_and(l, r);
    case FormulaKind::Or: return mk_or(l, r);
    default: return mk_implies(l, r);
  }
}

inline FormulaPtr rename_apart(const FormulaPtr& f) {
  std::map<std::string, std::string> scope;
  std::set<std::string> used = free_vars(*f);
  return rename_apart_rec(f, scope, used);
}

} // namespace detail

inline TermPtr parse_term(std::string_view text) {
  return detail::Parser(text).term();
}

inline FormulaPtr parse_formula(std::string_view text) {
  return detail::rename_apart(detail::Parser(text).formula());
}

} // namespace fa
