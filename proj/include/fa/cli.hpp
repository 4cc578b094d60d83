#pragma once

// Command-line front end: classify, eval, realize, check, pind,
// extract-fn, corpus. Output is JSON by default ({input, class, result,
// cost}) or a short plain form with --plain. Exit codes: 0 success (an
// absent realizer or witness is a successful result), 1 domain error,
// 2 usage or syntax error, 3 budget exceeded. Realizer values and all
// naturals are serialized as decimal strings.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fa/corpus.hpp"
#include "fa/errors.hpp"
#include "fa/eval.hpp"
#include "fa/formula.hpp"
#include "fa/hierarchy.hpp"
#include "fa/induct.hpp"
#include "fa/nat.hpp"
#include "fa/parse.hpp"
#include "fa/pretty.hpp"
#include "fa/realize.hpp"
#include "fa/seq.hpp"
#include "fa/term.hpp"

namespace fa::cli {

namespace detail {

using nlohmann::json;

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Common {
  std::vector<std::string> lets;
  std::uint64_t budget_bits = Budget{}.max_bits;
  std::uint64_t budget_steps = Budget{}.max_steps;
  bool plain = false;
  bool json_flag = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--let", lets, "variable binding name=value (repeatable)");
    cmd->add_option("--budget-bits", budget_bits, "bit-length budget");
    cmd->add_option("--budget-steps", budget_steps, "step-count budget");
    cmd->add_flag("--plain", plain, "plain text output");
    cmd->add_flag("--json", json_flag, "JSON output (default)");
  }

  Budget budget() const { return Budget{budget_bits, budget_steps}; }

  Valuation valuation() const {
    Valuation v;
    for (const auto& binding : lets) {
      auto eq = binding.find('=');
      if (eq == std::string::npos || eq == 0)
        throw UsageError("--let expects name=value, got '" + binding + "'");
      try {
        v.set(binding.substr(0, eq), Nat::from_decimal(binding.substr(eq + 1)));
      } catch (const std::invalid_argument&) {
        throw UsageError("--let value must be a decimal natural: '" + binding + "'");
      }
    }
    return v;
  }
};

// A positional starting with '@' names a file holding the input text.
inline std::string input_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read file '" + arg.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

inline json class_json(const FormulaClass& c) {
  return json{{"sharp", c.sharply_bounded},
              {"sigma_b1", c.sigma_b1},
              {"pi_b1", c.pi_b1}};
}

inline json cost_json(const CostReport& c) {
  return json{{"steps", c.steps}, {"peak_bits", c.peak_bits}};
}

inline void emit(std::ostream& out, const json& input, const json& cls,
                 const json& result, const CostReport& cost) {
  json doc{{"input", input}, {"class", cls}, {"result", result},
           {"cost", cost_json(cost)}};
  out << doc.dump(2) << "\n";
}

inline std::string error_kind(const Error& e) {
  if (dynamic_cast<const UnboundVariable*>(&e)) return "unbound_variable";
  if (dynamic_cast<const NotSigmaB1*>(&e)) return "not_sigma_b1";
  if (dynamic_cast<const NotASequence*>(&e)) return "not_a_sequence";
  if (dynamic_cast<const IndexOutOfRange*>(&e)) return "index_out_of_range";
  if (dynamic_cast<const MalformedInstance*>(&e)) return "malformed_instance";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget_exceeded";
  return "error";
}

// Output variable of a definition: the one free variable not bound by
// --let, unless named explicitly.
inline std::string designated_var(const FormulaPtr& f, const Valuation& params,
                                  const std::string& explicit_name,
                                  const char* role) {
  if (!explicit_name.empty()) return explicit_name;
  std::vector<std::string> candidates;
  for (const auto& name : free_vars(*f))
    if (!params.contains(name)) candidates.push_back(name);
  if (candidates.size() != 1)
    throw UsageError(std::string("cannot infer the ") + role +
                     " variable; name it explicitly");
  return candidates.front();
}

struct CorpusOptions {
  std::uint64_t seed = 1;
  int count = 100;
  int max_depth = 5;
  std::uint64_t max_bound = 64;
  std::string file;
  std::uint64_t cap = 0;
  bool has_cap = false;
};

inline int dispatch(const std::string& command, const std::string& positional,
                    Common& common, const std::string& realizer_dec,
                    const std::string& bound_arg, const std::string& var_name,
                    const std::string& output_name, CorpusOptions& corpus_opts,
                    std::ostream& out) {
  Budget budget = common.budget();
  Valuation lets = common.valuation();

  if (command == "classify") {
    FormulaPtr f = parse_formula(input_text(positional));
    FormulaClass c = classify(f);
    if (common.plain) {
      out << "sharp=" << (c.sharply_bounded ? "true" : "false")
          << " sigma_b1=" << (c.sigma_b1 ? "true" : "false")
          << " pi_b1=" << (c.pi_b1 ? "true" : "false") << "\n";
    } else {
      emit(out, pretty(f), class_json(c), class_json(c), CostReport{});
    }
    return 0;
  }

  if (command == "eval") {
    TermPtr t = parse_term(input_text(positional));
    auto [value, cost] = eval_term(t, lets, budget);
    if (common.plain) {
      out << value.to_decimal() << "\n";
    } else {
      emit(out, pretty(t), nullptr, json{{"value", value.to_decimal()}}, cost);
    }
    return 0;
  }

  if (command == "realize") {
    FormulaPtr f = parse_formula(input_text(positional));
    FormulaClass c = classify(f);
    auto [built, cost] = build_realizer(f, lets, budget);
    json result{{"realized", built.has_value()}};
    result["realizer"] = built ? json(built->value.to_decimal()) : json(nullptr);
    if (built) {
      FormulaPtr n = nnf(f);
      if (n->kind == FormulaKind::ExistsBounded || n->kind == FormulaKind::ExistsSharp)
        result["witness"] = beta(1, *built).to_decimal();
    }
    if (common.plain) {
      if (built)
        out << "realized " << built->value.to_decimal() << "\n";
      else
        out << "no realizer\n";
    } else {
      emit(out, pretty(f), class_json(c), result, cost);
    }
    return 0;
  }

  if (command == "check") {
    FormulaPtr f = parse_formula(input_text(positional));
    if (realizer_dec.empty()) throw UsageError("check requires --realizer");
    Realizer r;
    try {
      r = Realizer(Nat::from_decimal(realizer_dec));
    } catch (const std::invalid_argument&) {
      throw UsageError("--realizer must be a decimal natural");
    }
    auto [ok, cost] = check_realizer(f, r, lets, budget);
    if (common.plain) {
      out << (ok ? "accepted" : "rejected") << "\n";
    } else {
      emit(out, pretty(f), class_json(classify(f)), json{{"accepted", ok}}, cost);
    }
    return 0;
  }

  if (command == "pind") {
    FormulaPtr f = parse_formula(input_text(positional));
    if (bound_arg.empty()) throw UsageError("pind requires --bound");
    Nat upto;
    try {
      upto = Nat::from_decimal(bound_arg);
    } catch (const std::invalid_argument&) {
      throw UsageError("pind --bound must be a decimal natural");
    }
    std::string var = designated_var(f, lets, var_name, "induction");
    CostReport cost;
    PindReport rep = pind_check(f, var, upto, lets, budget, &cost);
    json result{{"base_ok", rep.base_ok},
                {"first_step_failure",
                 rep.first_step_failure ? json(rep.first_step_failure->to_decimal())
                                        : json(nullptr)},
                {"conclusion_ok_up_to",
                 rep.conclusion_ok_up_to ? json(rep.conclusion_ok_up_to->to_decimal())
                                         : json(nullptr)},
                {"checked_bound", rep.checked_bound.to_decimal()}};
    if (common.plain) {
      out << "base_ok=" << (rep.base_ok ? "true" : "false") << " first_step_failure="
          << (rep.first_step_failure ? rep.first_step_failure->to_decimal() : "none")
          << " conclusion_ok_up_to="
          << (rep.conclusion_ok_up_to ? rep.conclusion_ok_up_to->to_decimal() : "none")
          << "\n";
    } else {
      emit(out, pretty(f), class_json(classify(f)), result, cost);
    }
    return 0;
  }

  if (command == "extract-fn") {
    FormulaPtr f = parse_formula(input_text(positional));
    if (bound_arg.empty()) throw UsageError("extract-fn requires --bound");
    TermPtr bound = parse_term(bound_arg);
    std::string output = designated_var(f, lets, output_name, "output");
    CostReport cost;
    std::optional<Nat> value =
        extract_function(f, output, bound, lets, budget, &cost);
    json result{{"found", value.has_value()}};
    result["value"] = value ? json(value->to_decimal()) : json(nullptr);
    if (common.plain) {
      out << (value ? value->to_decimal() : "none") << "\n";
    } else {
      emit(out, pretty(f), class_json(classify(f)), result, cost);
    }
    return 0;
  }

  if (command == "corpus") {
    std::vector<CorpusEntry> entries;
    CorpusSpec spec{corpus_opts.seed, corpus_opts.max_depth, corpus_opts.max_bound,
                    corpus_opts.count};
    if (!corpus_opts.file.empty()) {
      std::ifstream in(corpus_opts.file);
      if (!in) throw UsageError("cannot read corpus file '" + corpus_opts.file + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      entries = corpus_from_text(buf.str());
    } else {
      entries = generate(spec);
    }
    json agreement = nullptr;
    if (corpus_opts.has_cap) {
      json failures = json::array();
      std::size_t passed = 0;
      for (const auto& e : entries) {
        if (exhaustive_agreement(e.formula, Nat(corpus_opts.cap), budget))
          ++passed;
        else
          failures.push_back(pretty(e.formula));
      }
      agreement = json{{"cap", corpus_opts.cap},
                       {"total", entries.size()},
                       {"passed", passed},
                       {"failures", failures}};
    }
    if (common.plain) {
      out << corpus_to_text(entries, spec);
      if (!agreement.is_null())
        out << "# agreement cap=" << corpus_opts.cap << " passed="
            << agreement["passed"].get<std::size_t>() << "/" << entries.size()
            << "\n";
    } else {
      json formulas = json::array();
      for (const auto& e : entries)
        formulas.push_back(json{{"formula", pretty(e.formula)},
                                {"class", class_json(e.cls)}});
      json result{{"count", entries.size()}, {"formulas", formulas}};
      if (!agreement.is_null()) result["agreement"] = agreement;
      emit(out, nullptr, nullptr, result, CostReport{});
    }
    return 0;
  }

  throw UsageError("unknown command '" + command + "'");
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  using detail::json;
  CLI::App app{"workbench for the bounded-arithmetic fragment S^1_2"};
  app.require_subcommand(1);

  detail::Common common;
  std::string positional, realizer_dec, bound_arg, var_name, output_name;
  detail::CorpusOptions corpus_opts;

  auto add_input = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("input", positional, what)->required();
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a formula");
  add_input(classify_cmd, "formula text or @file");
  common.attach(classify_cmd);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a term");
  add_input(eval_cmd, "term text or @file");
  common.attach(eval_cmd);

  CLI::App* realize_cmd =
      app.add_subcommand("realize", "construct a realizer if the formula is true");
  add_input(realize_cmd, "formula text or @file");
  common.attach(realize_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "check a realizer");
  add_input(check_cmd, "formula text or @file");
  check_cmd->add_option("--realizer", realizer_dec, "realizer value (decimal)");
  common.attach(check_cmd);

  CLI::App* pind_cmd =
      app.add_subcommand("pind", "check a PIND instance on an initial segment");
  add_input(pind_cmd, "formula text or @file");
  pind_cmd->add_option("--bound", bound_arg, "sweep bound N");
  pind_cmd->add_option("--var", var_name, "induction variable");
  common.attach(pind_cmd);

  CLI::App* extract_cmd = app.add_subcommand(
      "extract-fn", "least output satisfying a Sigma^b_1 definition");
  add_input(extract_cmd, "formula text or @file");
  extract_cmd->add_option("--bound", bound_arg, "output bound (term)");
  extract_cmd->add_option("--output", output_name, "output variable");
  common.attach(extract_cmd);

  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "generate or sweep a formula corpus");
  corpus_cmd->add_option("--seed", corpus_opts.seed, "generator seed");
  corpus_cmd->add_option("--count", corpus_opts.count, "number of formulas");
  corpus_cmd->add_option("--max-depth", corpus_opts.max_depth, "formula depth");
  corpus_cmd->add_option("--max-bound", corpus_opts.max_bound,
                         "largest literal quantifier bound");
  corpus_cmd->add_option("--file", corpus_opts.file, "read corpus from a file");
  corpus_cmd->add_option("--cap", corpus_opts.cap, "agreement sweep value cap")
      ->each([&](const std::string&) { corpus_opts.has_cap = true; });
  common.attach(corpus_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    std::string command;
    for (CLI::App* sub :
         {classify_cmd, eval_cmd, realize_cmd, check_cmd, pind_cmd, extract_cmd,
          corpus_cmd}) {
      if (sub->parsed()) command = sub->get_name();
    }
    return detail::dispatch(command, positional, common, realizer_dec, bound_arg,
                            var_name, output_name, corpus_opts, out);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    json doc{{"error",
              {{"kind", "budget_exceeded"},
               {"which", e.kind == BudgetKind::Bits ? "bits" : "steps"},
               {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    return 3;
  } catch (const Error& e) {
    json doc{{"error", {{"kind", detail::error_kind(e)}, {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace fa::cli
