#include <doctest.h>

#include <cstdint>
#include <random>

#include "fa/errors.hpp"
#include "fa/eval.hpp"
#include "fa/nat.hpp"
#include "fa/parse.hpp"
#include "oracles.hpp"

using namespace fa;

namespace {

Nat eval_str(const char* text, const Valuation& v = Valuation{},
             const Budget& b = Budget{}) {
  return eval_term(parse_term(text), v, b).first;
}

} // namespace

TEST_SUITE("eval") {

TEST_CASE("halving right-shifts the binary representation") {
  CHECK(eval_str("half(19)") == Nat(9));  // 10011 -> 1001
  CHECK(eval_str("half(10)") == Nat(5));  // 1010 -> 101
  CHECK(eval_str("half(0)") == Nat(0));
  CHECK(eval_str("half(1)") == Nat(0));
}

TEST_CASE("halving drops the last binary digit, string-checked") {
  Valuation v;
  Budget b;
  TermPtr t = parse_term("half(x)");
  for (std::uint64_t n = 1; n < (1u << 12); ++n) {
    v.set("x", Nat(n));
    Nat h = eval_term(t, v, b).first;
    std::string bin = fa::test::ref_binary_string(n);
    bin.pop_back();
    if (bin.empty()) bin = "0";
    CHECK(h.to_binary() == bin);
    CHECK(h.to_u64() == n >> 1);
  }
}

TEST_CASE("length is the binary digit count") {
  CHECK(eval_str("|0|") == Nat(0));
  CHECK(eval_str("|7|") == Nat(3));
  CHECK(eval_str("|8|") == Nat(4));
  Valuation v;
  TermPtr t = parse_term("|x|");
  for (std::uint64_t n = 0; n < (1u << 12); ++n) {
    v.set("x", Nat(n));
    CHECK(eval_term(t, v).first == Nat(fa::test::ref_bit_count(n)));
  }
}

TEST_CASE("bit_length boundary: |n| grows exactly at powers of two") {
  for (std::uint64_t n = 0; n < (1u << 12); ++n) {
    bool grows = Nat(n).bit_length() < Nat(n + 1).bit_length();
    bool pow2 = ((n + 1) & n) == 0; // n+1 is a power of two
    CHECK(grows == pow2);
  }
}

TEST_CASE("smash agrees with an independent power oracle") {
  CHECK(eval_str("3 # 3") == Nat(16)); // |3| = 2, 2^(2*2)
  CHECK(eval_str("3 # 3") == fa::test::ref_pow(Nat(2), 4));
  CHECK(eval_str("0 # 5") == Nat(1));
  CHECK(eval_str("0 # 0") == Nat(1));
  Valuation v;
  TermPtr t = parse_term("x # y");
  std::mt19937_64 eng(5);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t x = eng() % 4096, y = eng() % 4096;
    v.set("x", Nat(x));
    v.set("y", Nat(y));
    CHECK(eval_term(t, v).first ==
          fa::test::ref_pow(Nat(2), fa::test::ref_bit_count(x) * fa::test::ref_bit_count(y)));
  }
}

TEST_CASE("smash is symmetric, exhaustively below 2^10") {
  Valuation v;
  Budget b;
  TermPtr xy = parse_term("x # y");
  TermPtr yx = parse_term("y # x");
  for (std::uint64_t x = 0; x < (1u << 10); ++x) {
    for (std::uint64_t y = x; y < (1u << 10); ++y) {
      v.set("x", Nat(x));
      v.set("y", Nat(y));
      CHECK(eval_term(xy, v, b).first == eval_term(yx, v, b).first);
    }
  }
}

TEST_CASE("|x # y| = |x|*|y| + 1 for positive arguments, exhaustively below 2^8") {
  Valuation v;
  Budget b;
  TermPtr t = parse_term("x # y");
  for (std::uint64_t x = 1; x < (1u << 8); ++x) {
    for (std::uint64_t y = 1; y < (1u << 8); ++y) {
      v.set("x", Nat(x));
      v.set("y", Nat(y));
      CHECK(eval_term(t, v, b).first.bit_length() ==
            fa::test::ref_bit_count(x) * fa::test::ref_bit_count(y) + 1);
    }
  }
}

TEST_CASE("numerals, successor, addition, multiplication") {
  CHECK(eval_str("19") == Nat(19));
  CHECK(eval_str("S(0)") == Nat(1));
  CHECK(eval_str("2 + 3 * 4") == Nat(14));
  CHECK(eval_str("(2 + 3) * 4") == Nat(20));
  Valuation v;
  v.set("x", Nat::from_decimal("98123412341234123412341"));
  CHECK(eval_term(parse_term("x + 0"), v).first ==
        Nat::from_decimal("98123412341234123412341"));
}

TEST_CASE("unbound variables are reported by name") {
  try {
    eval_str("x + 1");
    CHECK(false);
  } catch (const UnboundVariable& e) {
    CHECK(e.name == "x");
  }
}

TEST_CASE("bit budget aborts smash towers deterministically") {
  Valuation v;
  v.set("x", Nat(255));
  Budget tiny{8, Budget{}.max_steps};
  try {
    eval_term(parse_term("x # x"), v, tiny);
    CHECK(false);
  } catch (const BudgetExceeded& e) {
    CHECK(e.kind == BudgetKind::Bits);
  }
  // Same term under the default budget is fine: 2^64 has 65 bits.
  CHECK(eval_term(parse_term("x # x"), v).first == Nat::pow2(64));
}

TEST_CASE("step budget aborts large multiplications deterministically") {
  Valuation v;
  v.set("x", Nat(255));
  Budget tiny{Budget{}.max_bits, 10};
  try {
    eval_term(parse_term("x * x"), v, tiny);
    CHECK(false);
  } catch (const BudgetExceeded& e) {
    CHECK(e.kind == BudgetKind::Steps);
  }
}

TEST_CASE("evaluation and its cost report are deterministic") {
  Valuation v;
  v.set("x", Nat(12345));
  v.set("y", Nat(678));
  TermPtr t = parse_term("half(x # y) + |x * y| * S(y)");
  auto first = eval_term(t, v);
  auto second = eval_term(t, v);
  CHECK(first.first == second.first);
  CHECK(first.second == second.second);
  CHECK(first.second.steps > 0);
  CHECK(first.second.peak_bits > 0);
}

TEST_CASE("peak bits never shrink when inputs grow") {
  const char* terms[] = {
      "half(x) + |y|",
      "x # y",
      "S(x) * (y + x)",
      "|x # y| + half(y * y)",
  };
  std::mt19937_64 eng(17);
  for (const char* s : terms) {
    TermPtr t = parse_term(s);
    for (int i = 0; i < 200; ++i) {
      std::uint64_t x = eng() % 100000, y = eng() % 100000;
      std::uint64_t dx = eng() % 100000, dy = eng() % 100000;
      Valuation small, large;
      small.set("x", Nat(x));
      small.set("y", Nat(y));
      large.set("x", Nat(x + dx));
      large.set("y", Nat(y + dy));
      CHECK(eval_term(t, large).second.peak_bits >=
            eval_term(t, small).second.peak_bits);
    }
  }
}

TEST_CASE("cost model charges the documented amounts on small cases") {
  // x with |x| = 3: Var costs 1, Len costs |x|+1 = 4.
  Valuation v;
  v.set("x", Nat(7));
  CHECK(eval_term(parse_term("|x|"), v).second.steps == 5);
  // Zero costs 1.
  CHECK(eval_term(parse_term("0"), Valuation{}).second.steps == 1);
  // x + x: two Var (2) plus max(3,3)+1 = 4 -> 6.
  CHECK(eval_term(parse_term("x + x"), v).second.steps == 6);
  // x * x: 2 + 3*3+1 = 12.
  CHECK(eval_term(parse_term("x * x"), v).second.steps == 12);
  // x # x: 2 + 3*3+1 = 12, peak 10 bits (2^9).
  auto smash = eval_term(parse_term("x # x"), v);
  CHECK(smash.second.steps == 12);
  CHECK(smash.second.peak_bits == 10);
}

} // TEST_SUITE
