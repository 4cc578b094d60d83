#pragma once

// Error taxonomy shared by the whole workbench. SyntaxError carries a
// source position; BudgetExceeded is an ordinary catchable outcome that
// means "infeasible at this budget", not a malformed input.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fa {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line_, int column_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
        line(line_), column(column_) {}
  int line;
  int column;
};

struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& name_)
      : Error("unbound variable: " + name_), name(name_) {}
  std::string name;
};

enum class BudgetKind { Bits, Steps };

struct BudgetExceeded : Error {
  explicit BudgetExceeded(BudgetKind kind_)
      : Error(kind_ == BudgetKind::Bits ? "budget exceeded: bits"
                                        : "budget exceeded: steps"),
        kind(kind_) {}
  BudgetKind kind;
};

struct NotASequence : Error {
  NotASequence() : Error("value is not a sequence code") {}
};

struct IndexOutOfRange : Error {
  IndexOutOfRange(std::uint64_t index_, std::uint64_t length_)
      : Error("sequence index " + std::to_string(index_) +
              " out of range for length " + std::to_string(length_)),
        index(index_), length(length_) {}
  std::uint64_t index;
  std::uint64_t length;
};

struct NotSigmaB1 : Error {
  NotSigmaB1() : Error("formula is not Sigma^b_1") {}
};

// Precondition violations that are neither syntax nor budget issues,
// e.g. a PIND instance with stray free variables.
struct MalformedInstance : Error {
  explicit MalformedInstance(const std::string& msg) : Error(msg) {}
};

} // namespace fa
