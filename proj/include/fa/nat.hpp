#pragma once

// Arbitrary-precision natural numbers.
//
// Little-endian base-2^32 limb vector, always normalized (no high zero
// limbs; the empty vector is 0). Only the operations the term language
// needs are provided: +, *, floor-halving, bit access, 2^k, comparison,
// monus, and decimal/hex/binary I/O. bit_length is the number of binary
// digits, computed from the representation (never via floating point).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fa {

class Nat {
public:
  Nat() = default;

  Nat(std::uint64_t v) {
    if (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
      std::uint32_t hi = static_cast<std::uint32_t>(v >> 32);
      if (hi != 0) limbs_.push_back(hi);
    }
  }

  static Nat pow2(std::uint64_t k) {
    Nat r;
    r.limbs_.assign(static_cast<std::size_t>(k / 32) + 1, 0);
    r.limbs_.back() = std::uint32_t{1} << (k % 32);
    return r;
  }

  static Nat from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal numeral");
    Nat r;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("invalid decimal digit in numeral");
      r.mul_small(10);
      r.add_small(static_cast<std::uint32_t>(c - '0'));
    }
    return r;
  }

  // MSB-first bit string, e.g. {1,0,0,1,1} -> 19. Leading zero bits allowed.
  static Nat from_bits_msb(const std::vector<bool>& bits) {
    Nat r;
    std::size_t n = bits.size();
    r.limbs_.assign(n / 32 + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (bits[n - 1 - i])
        r.limbs_[i / 32] |= std::uint32_t{1} << (i % 32);
    }
    r.normalize();
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }

  // Number of binary digits; 0 for 0.
  std::uint64_t bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint64_t top = 32;
    std::uint32_t hi = limbs_.back();
    while (!(hi & 0x80000000u)) {
      hi <<= 1;
      --top;
    }
    return (static_cast<std::uint64_t>(limbs_.size()) - 1) * 32 + top;
  }

  bool bit(std::uint64_t i) const {
    std::size_t limb = static_cast<std::size_t>(i / 32);
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
  }

  std::uint64_t to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("Nat does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  bool fits_u64() const { return limbs_.size() <= 2; }

  Nat& operator++() {
    for (auto& limb : limbs_) {
      if (++limb != 0) return *this;
    }
    limbs_.push_back(1);
    return *this;
  }

  friend Nat operator+(const Nat& a, const Nat& b) {
    const Nat& big = a.limbs_.size() >= b.limbs_.size() ? a : b;
    const Nat& small = a.limbs_.size() >= b.limbs_.size() ? b : a;
    Nat r;
    r.limbs_.reserve(big.limbs_.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.limbs_.size(); ++i) {
      std::uint64_t sum = carry + big.limbs_[i] +
                          (i < small.limbs_.size() ? small.limbs_[i] : 0);
      r.limbs_.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
      carry = sum >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  friend Nat operator*(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) return Nat();
    Nat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      std::uint64_t ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.normalize();
    return r;
  }

  // Floor division by two: drops the last binary digit.
  Nat half() const {
    Nat r;
    r.limbs_.resize(limbs_.size());
    std::uint32_t carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      r.limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
      carry = limbs_[i] & 1u;
    }
    r.normalize();
    return r;
  }

  // max(*this - b, 0); exact subtraction when b <= *this.
  Nat monus(const Nat& b) const {
    if (*this <= b) return Nat();
    Nat r;
    r.limbs_.resize(limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < b.limbs_.size() ? b.limbs_[i] : 0);
      borrow = 0;
      if (cur < 0) {
        cur += std::int64_t{1} << 32;
        borrow = 1;
      }
      r.limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const Nat& a, const Nat& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const Nat& a, const Nat& b) { return !(a == b); }

  friend bool operator<(const Nat& a, const Nat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Nat& a, const Nat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Nat& a, const Nat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Nat& a, const Nat& b) { return cmp(a, b) >= 0; }

  std::string to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      std::string chunk = std::to_string(rem);
      if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
      out.insert(0, chunk);
    }
    return out;
  }

  std::string to_binary() const {
    if (limbs_.empty()) return "0";
    std::uint64_t n = bit_length();
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = n; i-- > 0;) s.push_back(bit(i) ? '1' : '0');
    return s;
  }

  std::string to_hex() const {
    if (limbs_.empty()) return "0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      for (int shift = 28; shift >= 0; shift -= 4)
        s.push_back(digits[(limbs_[i] >> shift) & 0xfu]);
    }
    s.erase(0, s.find_first_not_of('0'));
    return s;
  }

private:
  static int cmp(const Nat& a, const Nat& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  void mul_small(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  void add_small(std::uint32_t v) {
    std::uint64_t carry = v;
    for (auto& limb : limbs_) {
      if (carry == 0) return;
      std::uint64_t cur = limb + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  void normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

} // namespace fa
