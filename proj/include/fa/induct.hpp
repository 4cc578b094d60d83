#pragma once

// Ground-level checking of Sigma^b_1 PIND instances on a finite initial
// segment: base case phi(0), the binary-shift step phi(floor(x/2)) ->
// phi(x) for x <= N, and the conclusion phi(m) for m <= M. No proofs are
// involved; everything is evaluated in the standard model and
// counterexamples are reported rather than derived.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fa/errors.hpp"
#include "fa/eval.hpp"
#include "fa/formula.hpp"
#include "fa/hierarchy.hpp"
#include "fa/nat.hpp"
#include "fa/realize.hpp"

namespace fa {

struct PindReport {
  bool base_ok = false;
  std::optional<Nat> first_step_failure;
  std::optional<Nat> conclusion_ok_up_to;
  Nat checked_bound;
};

namespace detail {

constexpr std::uint64_t kMaxPindSweep = std::uint64_t{1} << 24;

// One truth value per m in 0..N.
inline std::vector<char> pind_truth_table(const FormulaPtr& f,
                                          const std::string& var,
                                          const Nat& upto, const Valuation& params,
                                          const Budget& b,
                                          CostReport* cost_out = nullptr) {
  if (!classify(f).sigma_b1) throw NotSigmaB1();
  for (const auto& name : free_vars(*f)) {
    if (name != var && !params.contains(name))
      throw MalformedInstance("free variable '" + name +
                              "' is neither the induction variable nor a parameter");
  }
  if (params.contains(var))
    throw MalformedInstance("induction variable '" + var + "' is also a parameter");
  if (!upto.fits_u64() || upto.to_u64() >= kMaxPindSweep)
    throw MalformedInstance("sweep bound too large (max 2^24 - 1)");
  std::uint64_t n = upto.to_u64();
  std::vector<char> truth(static_cast<std::size_t>(n) + 1);
  RealizeCtx ctx(params, b);
  ctx.vals.push(var, Nat());
  for (std::uint64_t m = 0; m <= n; ++m) {
    ctx.vals.top_value() = Nat(m);
    truth[static_cast<std::size_t>(m)] = brute_rec(*f, ctx) ? 1 : 0;
  }
  ctx.vals.pop();
  if (cost_out) *cost_out = ctx.meter.report();
  return truth;
}

} // namespace detail

inline PindReport pind_check(const FormulaPtr& f, const std::string& var,
                             const Nat& upto, const Valuation& params = Valuation{},
                             const Budget& b = Budget{},
                             CostReport* cost_out = nullptr) {
  std::vector<char> truth = detail::pind_truth_table(f, var, upto, params, b, cost_out);
  std::uint64_t n = upto.to_u64();
  PindReport report;
  report.checked_bound = upto;
  report.base_ok = truth[0] != 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (truth[static_cast<std::size_t>(m / 2)] && !truth[static_cast<std::size_t>(m)]) {
      report.first_step_failure = Nat(m);
      break;
    }
  }
  if (report.base_ok) {
    std::uint64_t good = 0;
    while (good < n && truth[static_cast<std::size_t>(good) + 1]) ++good;
    report.conclusion_ok_up_to = Nat(good);
  }
  return report;
}

// Executable soundness of tree induction on the finite segment: whenever
// the base holds and no step failure exists at or below N, the conclusion
// holds for every m <= N. Always true on inputs where it does not error.
inline bool pind_soundness_demo(const FormulaPtr& f, const std::string& var,
                                const Nat& upto,
                                const Valuation& params = Valuation{},
                                const Budget& b = Budget{}) {
  PindReport r = pind_check(f, var, upto, params, b);
  if (!(r.base_ok && !r.first_step_failure)) return true;
  return r.conclusion_ok_up_to && *r.conclusion_ok_up_to == upto;
}

} // namespace fa
