#pragma once

// Test-side oracles, independent of the evaluator and classifier paths
// they are used to check.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fa/formula.hpp"
#include "fa/hierarchy.hpp"
#include "fa/nat.hpp"
#include "fa/term.hpp"

namespace fa::test {

// base^exp by repeated multiplication; never touches the shift-based
// pow2 path used by the smash evaluator.
inline Nat ref_pow(const Nat& base, std::uint64_t exp) {
  Nat r(1);
  for (std::uint64_t i = 0; i < exp; ++i) r = r * base;
  return r;
}

// Binary digit count of a machine word.
inline std::uint64_t ref_bit_count(std::uint64_t n) {
  std::uint64_t c = 0;
  while (n != 0) {
    ++c;
    n >>= 1;
  }
  return c;
}

inline std::string ref_binary_string(std::uint64_t n) {
  if (n == 0) return "0";
  std::string s;
  while (n != 0) {
    s.insert(s.begin(), static_cast<char>('0' + (n & 1)));
    n >>= 1;
  }
  return s;
}

// Classification by exhaustive clause application: start from the
// sharply bounded base and close the subformula set under the
// membership clauses until nothing changes. Independent of the
// single-pass classifier.
struct FixpointFlags {
  bool sharp = false;
  bool sigma = false;
  bool pi = false;
};

inline bool fixpoint_sharp(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Leq:
    case FormulaKind::Eq: return true;
    case FormulaKind::Not: return fixpoint_sharp(*f.f1);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return fixpoint_sharp(*f.f1) && fixpoint_sharp(*f.f2);
    case FormulaKind::ExistsSharp:
    case FormulaKind::ForallSharp: return fixpoint_sharp(*f.f1);
    case FormulaKind::ExistsBounded:
    case FormulaKind::ForallBounded: return false;
  }
  return false;
}

inline FixpointFlags classify_fixpoint(const FormulaPtr& root) {
  std::vector<const Formula*> nodes;
  auto collect = [&](auto&& self, const Formula* f) -> void {
    if (f->f1) self(self, f->f1.get());
    if (f->f2) self(self, f->f2.get());
    nodes.push_back(f);
  };
  collect(collect, root.get());

  std::map<const Formula*, FixpointFlags> flags;
  for (const Formula* n : nodes) {
    FixpointFlags init;
    init.sharp = fixpoint_sharp(*n);
    if (init.sharp) {
      init.sigma = true;
      init.pi = true;
    }
    flags[n] = init;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Formula* n : nodes) {
      FixpointFlags& fl = flags[n];
      auto set_sigma = [&] {
        if (!fl.sigma) {
          fl.sigma = true;
          changed = true;
        }
      };
      auto set_pi = [&] {
        if (!fl.pi) {
          fl.pi = true;
          changed = true;
        }
      };
      switch (n->kind) {
        case FormulaKind::Leq:
        case FormulaKind::Eq: break;
        case FormulaKind::And:
        case FormulaKind::Or: {
          const FixpointFlags& a = flags[n->f1.get()];
          const FixpointFlags& b = flags[n->f2.get()];
          if (a.sigma && b.sigma) set_sigma();
          if (a.pi && b.pi) set_pi();
          break;
        }
        case FormulaKind::Not: {
          const FixpointFlags& a = flags[n->f1.get()];
          if (a.pi) set_sigma();
          if (a.sigma) set_pi();
          break;
        }
        case FormulaKind::Implies: {
          const FixpointFlags& a = flags[n->f1.get()];
          const FixpointFlags& b = flags[n->f2.get()];
          if (a.pi && b.sigma) set_sigma();
          if (a.sigma && b.pi) set_pi();
          break;
        }
        case FormulaKind::ExistsBounded: {
          if (flags[n->f1.get()].sigma) set_sigma();
          break;
        }
        case FormulaKind::ForallBounded: {
          if (flags[n->f1.get()].pi) set_pi();
          break;
        }
        case FormulaKind::ExistsSharp:
        case FormulaKind::ForallSharp: {
          // A sharp bound is still a term bound, so both closure clauses
          // apply.
          if (flags[n->f1.get()].sigma) set_sigma();
          if (flags[n->f1.get()].pi) set_pi();
          break;
        }
      }
    }
  }
  return flags[root.get()];
}

inline bool uses_not_or_implies(const Formula& f) {
  if (f.kind == FormulaKind::Not || f.kind == FormulaKind::Implies) return true;
  if (is_atom(f)) return false;
  if (f.f1 && uses_not_or_implies(*f.f1)) return true;
  if (f.f2 && uses_not_or_implies(*f.f2)) return true;
  return false;
}

inline bool quantifier_bound_mentions_own_var(const Formula& f) {
  if (is_atom(f)) return false;
  if (is_quantifier(f)) {
    if (free_vars(*f.bound).count(f.var)) return true;
    return quantifier_bound_mentions_own_var(*f.f1);
  }
  if (f.f1 && quantifier_bound_mentions_own_var(*f.f1)) return true;
  if (f.f2 && quantifier_bound_mentions_own_var(*f.f2)) return true;
  return false;
}

} // namespace fa::test
