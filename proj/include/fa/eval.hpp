#pragma once

// Numeric semantics over the naturals with explicit cost accounting.
//
// Step charges per node (proportional to schoolbook bit operations):
//   Zero, Var            1
//   Succ, Half, Len      bit_length(operand) + 1
//   Add                  max(bit lengths) + 1
//   Mul                  product of bit lengths + 1
//   Smash                |x|*|y| + 1  (the output bit length)
//   Leq/Eq comparison    max(bit lengths) + 1
//
// peak_bits records the largest intermediate value's bit length. The
// Budget caps both counters; exceeding either aborts deterministically
// with BudgetExceeded, which means "infeasible at this budget", never
// that the input was malformed. Results that would blow max_bits (smash
// towers, huge products) are rejected before being materialized.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fa/errors.hpp"
#include "fa/nat.hpp"
#include "fa/term.hpp"

namespace fa {

struct CostReport {
  std::uint64_t steps = 0;
  std::uint64_t peak_bits = 0;

  friend bool operator==(const CostReport& a, const CostReport& b) {
    return a.steps == b.steps && a.peak_bits == b.peak_bits;
  }
};

struct Budget {
  std::uint64_t max_bits = 1u << 20;            // 1,048,576
  std::uint64_t max_steps = std::uint64_t{1} << 32; // 4,294,967,296
};

// Finite map from variable names to values. Lookups are linear; the maps
// stay tiny (free variables plus the active quantifier spine).
class Valuation {
public:
  Valuation() = default;

  void set(const std::string& name, Nat value) {
    for (auto& e : entries_)
      if (e.first == name) {
        e.second = std::move(value);
        return;
      }
    entries_.emplace_back(name, std::move(value));
  }

  const Nat* find(const std::string& name) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  bool contains(const std::string& name) const { return find(name) != nullptr; }

  // Scoped binding used by quantifier sweeps.
  void push(const std::string& name, Nat value) {
    entries_.emplace_back(name, std::move(value));
  }
  void pop() { entries_.pop_back(); }
  Nat& top_value() { return entries_.back().second; }

  const std::vector<std::pair<std::string, Nat>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

private:
  std::vector<std::pair<std::string, Nat>> entries_;
};

class CostMeter {
public:
  explicit CostMeter(const Budget& budget) : budget_(budget) {}

  void add_steps(std::uint64_t n) {
    report_.steps += n;
    if (report_.steps > budget_.max_steps) throw BudgetExceeded(BudgetKind::Steps);
  }

  void note_bits(std::uint64_t bits) {
    if (bits > report_.peak_bits) report_.peak_bits = bits;
    if (bits > budget_.max_bits) throw BudgetExceeded(BudgetKind::Bits);
  }

  // Reject a result of a known bit length before materializing it.
  void require_bits(std::uint64_t bits) const {
    if (bits > budget_.max_bits) throw BudgetExceeded(BudgetKind::Bits);
  }

  const CostReport& report() const { return report_; }
  const Budget& budget() const { return budget_; }

private:
  const Budget& budget_;
  CostReport report_;
};

namespace detail {

inline Nat eval_term_rec(const Term& t, const Valuation& v, CostMeter& m) {
  switch (t.kind) {
    case TermKind::Zero:
      m.add_steps(1);
      return Nat();
    case TermKind::Var: {
      const Nat* val = v.find(t.name);
      if (!val) throw UnboundVariable(t.name);
      m.add_steps(1);
      m.note_bits(val->bit_length());
      return *val;
    }
    case TermKind::Succ: {
      Nat a = eval_term_rec(*t.lhs, v, m);
      m.add_steps(a.bit_length() + 1);
      ++a;
      m.note_bits(a.bit_length());
      return a;
    }
    case TermKind::Half: {
      Nat a = eval_term_rec(*t.lhs, v, m);
      m.add_steps(a.bit_length() + 1);
      Nat r = a.half();
      m.note_bits(r.bit_length());
      return r;
    }
    case TermKind::Len: {
      Nat a = eval_term_rec(*t.lhs, v, m);
      m.add_steps(a.bit_length() + 1);
      Nat r(a.bit_length());
      m.note_bits(r.bit_length());
      return r;
    }
    case TermKind::Add: {
      Nat a = eval_term_rec(*t.lhs, v, m);
      Nat b = eval_term_rec(*t.rhs, v, m);
      m.add_steps(std::max(a.bit_length(), b.bit_length()) + 1);
      Nat r = a + b;
      m.note_bits(r.bit_length());
      return r;
    }
    case TermKind::Mul: {
      Nat a = eval_term_rec(*t.lhs, v, m);
      Nat b = eval_term_rec(*t.rhs, v, m);
      std::uint64_t la = a.bit_length(), lb = b.bit_length();
      m.add_steps(la * lb + 1);
      if (la > 0 && lb > 0) m.require_bits(la + lb - 1);
      Nat r = a * b;
      m.note_bits(r.bit_length());
      return r;
    }
    case TermKind::Smash: {
      Nat a = eval_term_rec(*t.lhs, v, m);
      Nat b = eval_term_rec(*t.rhs, v, m);
      std::uint64_t e = a.bit_length() * b.bit_length();
      m.add_steps(e + 1);
      m.require_bits(e + 1);
      Nat r = Nat::pow2(e);
      m.note_bits(r.bit_length());
      return r;
    }
  }
  throw Error("unreachable term kind");
}

// Ground truth of an atomic formula; charges the comparison.
inline bool eval_atom(const Term& s, const Term& t, bool leq, const Valuation& v,
                      CostMeter& m) {
  Nat a = eval_term_rec(s, v, m);
  Nat b = eval_term_rec(t, v, m);
  m.add_steps(std::max(a.bit_length(), b.bit_length()) + 1);
  return leq ? a <= b : a == b;
}

} // namespace detail

inline std::pair<Nat, CostReport> eval_term(const Term& t, const Valuation& v,
                                            const Budget& b = Budget{}) {
  CostMeter m(b);
  Nat r = detail::eval_term_rec(t, v, m);
  return {std::move(r), m.report()};
}

inline std::pair<Nat, CostReport> eval_term(const TermPtr& t, const Valuation& v,
                                            const Budget& b = Budget{}) {
  return eval_term(*t, v, b);
}

// |n|: binary digit count, |0| = 0.
inline Nat bit_length(const Nat& n) { return Nat(n.bit_length()); }

} // namespace fa
