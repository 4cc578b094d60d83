#pragma once

// Syntactic classification in the first level of the bounded-formula
// hierarchy, and negation normalization.
//
// A formula is sharply bounded when every quantifier in it carries a
// length bound. Sigma^b_1 / Pi^b_1 membership follows the inductive
// definition: the sharply bounded formulas are the base; (EX y <= t) and
// (ALL y <= |t|) preserve Sigma^b_1 while (ALL y <= t) and (EX y <= |t|)
// preserve Pi^b_1; AND/OR preserve both; NOT and IMPLIES swap sides.
// Membership is decided by one structural pass. Only the syntactic flags
// are reported; provable (Delta^b_1) equivalence is out of reach of a scan.

#include <memory>

#include "fa/errors.hpp"
#include "fa/formula.hpp"
#include "fa/term.hpp"

namespace fa {

struct FormulaClass {
  bool sharply_bounded = false;
  bool sigma_b1 = false;
  bool pi_b1 = false;

  friend bool operator==(const FormulaClass& a, const FormulaClass& b) {
    return a.sharply_bounded == b.sharply_bounded && a.sigma_b1 == b.sigma_b1 &&
           a.pi_b1 == b.pi_b1;
  }
};

inline FormulaClass classify(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Leq:
    case FormulaKind::Eq:
      return {true, true, true};
    case FormulaKind::And:
    case FormulaKind::Or: {
      FormulaClass a = classify(*f.f1);
      FormulaClass b = classify(*f.f2);
      return {a.sharply_bounded && b.sharply_bounded, a.sigma_b1 && b.sigma_b1,
              a.pi_b1 && b.pi_b1};
    }
    case FormulaKind::Not: {
      FormulaClass a = classify(*f.f1);
      return {a.sharply_bounded, a.pi_b1, a.sigma_b1};
    }
    case FormulaKind::Implies: {
      FormulaClass a = classify(*f.f1);
      FormulaClass b = classify(*f.f2);
      return {a.sharply_bounded && b.sharply_bounded, a.pi_b1 && b.sigma_b1,
              a.sigma_b1 && b.pi_b1};
    }
    case FormulaKind::ExistsBounded: {
      FormulaClass a = classify(*f.f1);
      return {false, a.sigma_b1, false};
    }
    case FormulaKind::ForallBounded: {
      FormulaClass a = classify(*f.f1);
      return {false, false, a.pi_b1};
    }
    case FormulaKind::ExistsSharp:
    case FormulaKind::ForallSharp: {
      FormulaClass a = classify(*f.f1);
      return {a.sharply_bounded, a.sigma_b1, a.pi_b1};
    }
  }
  return {};
}

inline FormulaClass classify(const FormulaPtr& f) { return classify(*f); }

// Truth-equivalent positive form of a negated atom over the naturals:
//   NOT (s <= t)  ->  S(t) <= s
//   NOT (s = t)   ->  S(s) <= t  OR  S(t) <= s
inline FormulaPtr negated_atom_eval_form(const Formula& atom) {
  if (!is_atom(atom)) throw Error("negated_atom_eval_form expects an atom");
  if (atom.kind == FormulaKind::Leq) return mk_leq(mk_succ(atom.t2), atom.t1);
  return mk_or(mk_leq(mk_succ(atom.t1), atom.t2), mk_leq(mk_succ(atom.t2), atom.t1));
}

namespace detail {

inline FormulaPtr nnf_pos(const FormulaPtr& f);
inline FormulaPtr nnf_neg(const FormulaPtr& f);

inline FormulaPtr nnf_pos(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Leq:
    case FormulaKind::Eq:
      return f;
    case FormulaKind::And: return mk_and(nnf_pos(f->f1), nnf_pos(f->f2));
    case FormulaKind::Or: return mk_or(nnf_pos(f->f1), nnf_pos(f->f2));
    case FormulaKind::Not: return nnf_neg(f->f1);
    case FormulaKind::Implies: return mk_or(nnf_neg(f->f1), nnf_pos(f->f2));
    case FormulaKind::ExistsBounded:
    case FormulaKind::ForallBounded:
    case FormulaKind::ExistsSharp:
    case FormulaKind::ForallSharp:
      return std::make_shared<Formula>(f->kind, nullptr, nullptr, nnf_pos(f->f1),
                                       nullptr, f->var, f->bound);
  }
  return f;
}

inline FormulaPtr nnf_neg(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Leq:
    case FormulaKind::Eq:
      return negated_atom_eval_form(*f);
    case FormulaKind::And: return mk_or(nnf_neg(f->f1), nnf_neg(f->f2));
    case FormulaKind::Or: return mk_and(nnf_neg(f->f1), nnf_neg(f->f2));
    case FormulaKind::Not: return nnf_pos(f->f1);
    case FormulaKind::Implies: return mk_and(nnf_pos(f->f1), nnf_neg(f->f2));
    case FormulaKind::ExistsBounded:
      return std::make_shared<Formula>(FormulaKind::ForallBounded, nullptr, nullptr,
                                       nnf_neg(f->f1), nullptr, f->var, f->bound);
    case FormulaKind::ForallBounded:
      return std::make_shared<Formula>(FormulaKind::ExistsBounded, nullptr, nullptr,
                                       nnf_neg(f->f1), nullptr, f->var, f->bound);
    case FormulaKind::ExistsSharp:
      return std::make_shared<Formula>(FormulaKind::ForallSharp, nullptr, nullptr,
                                       nnf_neg(f->f1), nullptr, f->var, f->bound);
    case FormulaKind::ForallSharp:
      return std::make_shared<Formula>(FormulaKind::ExistsSharp, nullptr, nullptr,
                                       nnf_neg(f->f1), nullptr, f->var, f->bound);
  }
  return f;
}

} // namespace detail

// Negation normal form: pushes NOT down to atoms and rewrites the
// resulting negated atoms into positive ones, eliminating IMPLIES via
// its classical reading. Ground truth is preserved under every
// valuation, and a Sigma^b_1 input stays Sigma^b_1.
inline FormulaPtr nnf(const FormulaPtr& f) { return detail::nnf_pos(f); }

} // namespace fa
