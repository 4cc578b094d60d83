#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "fa/errors.hpp"
#include "fa/nat.hpp"
#include "fa/seq.hpp"

using namespace fa;

TEST_SUITE("seq") {

TEST_CASE("pinned codes for tiny sequences") {
  // Layout: "1" then per element (bits each prefixed 1) then "00".
  CHECK(encode_seq({}).value == Nat(1));
  CHECK(encode_seq({Nat(0)}).value == Nat(4));        // 100
  CHECK(encode_seq({Nat(1)}).value == Nat(28));       // 11100
  CHECK(encode_seq({Nat(0), Nat(0)}).value == Nat(16)); // 10000
}

TEST_CASE("round-trip contracts from the module examples") {
  Realizer empty = encode_seq({});
  CHECK(seq_len(empty) == 0);

  Realizer one = encode_seq({Nat(5)});
  CHECK(seq_len(one) == 1);
  CHECK(beta(1, one) == Nat(5));

  Realizer two = encode_seq({Nat(2), Nat(0)});
  CHECK(seq_len(two) == 2);
  CHECK(beta(1, two) == Nat(2));
  CHECK(beta(2, two) == Nat(0));

  Realizer seven = encode_seq({Nat(7)});
  CHECK(beta(1, seven) == Nat(7));
  Realizer pair = encode_seq({Nat(2), Nat(9)});
  CHECK(beta(2, pair) == Nat(9));
  CHECK_THROWS_AS(beta(3, pair), IndexOutOfRange);
  CHECK_THROWS_AS(beta(0, pair), IndexOutOfRange);
}

TEST_CASE("non-sequences are rejected") {
  CHECK(!is_seq(Nat(0)));
  CHECK(is_seq(Nat(1)));
  CHECK(!is_seq(Nat(2)));  // dangling bit after the tag
  CHECK(!is_seq(Nat(3)));
  CHECK(is_seq(Nat(4)));
  CHECK(!is_seq(Nat(5)));  // "01" pair
  CHECK(!is_seq(Nat(24))); // 11000: leading zero in an element
  CHECK_THROWS_AS(beta(1, Realizer(Nat(0))), NotASequence);
  CHECK_THROWS_AS(seq_len(Realizer(Nat(7))), NotASequence);
}

TEST_CASE("decode then re-encode is the identity on all small codes") {
  for (std::uint64_t r = 0; r < (1u << 14); ++r) {
    auto decoded = decode_seq(Nat(r));
    if (decoded) CHECK(encode_seq(*decoded).value == Nat(r));
  }
}

TEST_CASE("encode then decode is the identity, randomized") {
  std::mt19937_64 eng(123);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t len = eng() % 9;
    std::vector<Nat> items;
    for (std::size_t i = 0; i < len; ++i) items.push_back(Nat(eng() % 65536));
    Realizer r = encode_seq(items);
    auto back = decode_seq(r.value);
    REQUIRE(back.has_value());
    REQUIRE(back->size() == items.size());
    for (std::size_t i = 0; i < items.size(); ++i) CHECK((*back)[i] == items[i]);
  }
}

TEST_CASE("exhaustive round-trip for length <= 2 with small elements") {
  for (std::uint64_t a = 0; a < 64; ++a) {
    Realizer one = encode_seq({Nat(a)});
    CHECK(seq_len(one) == 1);
    CHECK(beta(1, one) == Nat(a));
    for (std::uint64_t b = 0; b < 64; ++b) {
      Realizer two = encode_seq({Nat(a), Nat(b)});
      CHECK(seq_len(two) == 2);
      CHECK(beta(1, two) == Nat(a));
      CHECK(beta(2, two) == Nat(b));
    }
  }
}

TEST_CASE("encoding respects the bit budget") {
  Budget tiny{16, Budget{}.max_steps};
  CHECK_THROWS_AS(encode_seq({Nat(65535), Nat(65535)}, tiny), BudgetExceeded);
  CHECK(encode_seq({Nat(1)}, tiny).value == Nat(28));
}

TEST_CASE("nested sequence codes survive") {
  Realizer inner = encode_seq({Nat(3), Nat(0)});
  Realizer outer = encode_seq({inner.value, Nat(12345)});
  CHECK(seq_len(outer) == 2);
  CHECK(beta(1, outer) == inner.value);
  CHECK(beta(2, outer) == Nat(12345));
  auto nested = decode_seq(beta(1, outer));
  REQUIRE(nested.has_value());
  CHECK((*nested)[0] == Nat(3));
}

} // TEST_SUITE
