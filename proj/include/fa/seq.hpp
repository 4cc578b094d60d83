#pragma once

// Tuple coding for realizers: Seq / Len / beta.
//
// A sequence code is read as a binary string (MSB first):
//
//   "1" . { for each element e:  each bit of e prefixed by "1", then "00" }
//
// so <> = 1b1 = 1, <0> = 0b100 = 4, <1> = 0b11100 = 28, <0,0> = 0b10000 = 16.
// Element bit strings are minimal (no leading zeros; 0 contributes no
// bits), which makes decode(encode(L)) = L and encode(decode(r)) = r on
// valid codes. Seq, Len and beta are all one linear scan of the code.

#include <cstdint>
#include <optional>
#include <vector>

#include "fa/errors.hpp"
#include "fa/eval.hpp"
#include "fa/nat.hpp"

namespace fa {

struct Realizer {
  Nat value;

  Realizer() = default;
  explicit Realizer(Nat v) : value(std::move(v)) {}

  friend bool operator==(const Realizer& a, const Realizer& b) {
    return a.value == b.value;
  }
};

// nullopt when r is not a valid sequence code.
inline std::optional<std::vector<Nat>> decode_seq(const Nat& r) {
  if (r.is_zero()) return std::nullopt;
  std::vector<Nat> elements;
  std::vector<bool> bits;
  std::uint64_t n = r.bit_length();
  // Skip the leading tag bit (always 1 for a nonzero value).
  std::uint64_t i = n - 1;
  while (i > 0) {
    if (i < 2) return std::nullopt; // dangling single bit
    bool marker = r.bit(i - 1);
    bool payload = r.bit(i - 2);
    if (marker) {
      bits.push_back(payload);
    } else {
      if (payload) return std::nullopt; // "01" is not a valid pair
      if (!bits.empty() && !bits.front()) return std::nullopt; // leading zero
      elements.push_back(Nat::from_bits_msb(bits));
      bits.clear();
    }
    i -= 2;
  }
  if (!bits.empty()) return std::nullopt; // element without terminator
  return elements;
}

inline bool is_seq(const Nat& r) { return decode_seq(r).has_value(); }

inline Realizer encode_seq(const std::vector<Nat>& items,
                           const Budget& budget = Budget{}) {
  std::uint64_t total = 1;
  for (const Nat& e : items) total += 2 * e.bit_length() + 2;
  if (total > budget.max_bits) throw BudgetExceeded(BudgetKind::Bits);
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(total));
  bits.push_back(true);
  for (const Nat& e : items) {
    for (std::uint64_t j = e.bit_length(); j-- > 0;) {
      bits.push_back(true);
      bits.push_back(e.bit(j));
    }
    bits.push_back(false);
    bits.push_back(false);
  }
  return Realizer(Nat::from_bits_msb(bits));
}

inline std::uint64_t seq_len(const Realizer& r) {
  auto elements = decode_seq(r.value);
  if (!elements) throw NotASequence();
  return elements->size();
}

// 1-indexed projection.
inline Nat beta(std::uint64_t i, const Realizer& r) {
  auto elements = decode_seq(r.value);
  if (!elements) throw NotASequence();
  if (i < 1 || i > elements->size()) throw IndexOutOfRange(i, elements->size());
  return (*elements)[i - 1];
}

} // namespace fa
