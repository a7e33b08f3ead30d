#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace npsplit {

// Strings over {0,1}, stored as '0'/'1' characters.
using Bits = std::string;

// Arbitrary-precision natural number. Used for enumeration indices, clock
// budgets and the gate arithmetic, all of which outgrow 64 bits.
using BigNat = boost::multiprecision::cpp_int;

inline bool is_bitstring(const Bits& s) {
  for (char c : s)
    if (c != '0' && c != '1') return false;
  return true;
}

// Lexicographic successor within a fixed length; false once exhausted.
inline bool next_same_length(Bits& s) {
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it == '0') {
      *it = '1';
      return true;
    }
    *it = '0';
  }
  return false;
}

// Calls fn(y) for every y in length-then-lexicographic order with
// |y| <= max_len, stopping early when fn returns true. Returns the number of
// strings examined.
template <typename Fn>
uint64_t for_each_string_length_lex(uint64_t max_len, Fn&& fn) {
  uint64_t examined = 0;
  for (uint64_t len = 0; len <= max_len; ++len) {
    Bits y(len, '0');
    while (true) {
      ++examined;
      if (fn(static_cast<const Bits&>(y))) return examined;
      if (len == 0 || !next_same_length(y)) break;
    }
  }
  return examined;
}

// The standard bijection between naturals and bitstrings in length-lex order:
// 0 <-> "", 1 <-> "0", 2 <-> "1", 3 <-> "00", ...
// (write n+1 in binary and drop the leading 1).
inline Bits nat_to_string(const BigNat& n) {
  BigNat m = n + 1;
  Bits out;
  while (m > 1) {
    out.push_back((m & 1) != 0 ? '1' : '0');
    m >>= 1;
  }
  return Bits(out.rbegin(), out.rend());
}

inline BigNat string_to_nat(const Bits& s) {
  BigNat m = 1;
  for (char c : s) {
    m <<= 1;
    if (c == '1') m |= 1;
  }
  return m - 1;
}

inline uint64_t floor_log2(uint64_t n) {
  // n >= 1
  return 63u - static_cast<uint64_t>(std::countl_zero(n));
}

// Smallest a with 2^a >= n, for n >= 1.
inline uint64_t ceil_log2(uint64_t n) {
  if (n <= 1) return 0;
  return floor_log2(n - 1) + 1;
}

inline uint64_t ceil_log2(const BigNat& n) {
  if (n <= 1) return 0;
  BigNat m = n - 1;
  return static_cast<uint64_t>(boost::multiprecision::msb(m)) + 1;
}

// b^e over big naturals. The gate uses the convention 0^0 = 0 (so the
// time bound of the index-0 machine at depth 0 is exactly 0); pass
// zero_pow_zero = 1 where the ordinary convention is wanted.
inline BigNat ipow(const BigNat& base, const BigNat& exp, unsigned zero_pow_zero = 1) {
  if (exp == 0) return (base == 0) ? BigNat(zero_pow_zero) : BigNat(1);
  if (base == 0) return 0;
  if (base == 1) return 1;
  BigNat result = 1, b = base, e = exp;
  while (true) {
    if ((e & 1) != 0) result *= b;
    e >>= 1;
    if (e == 0) break;
    b *= b;
  }
  return result;
}

}  // namespace npsplit
