#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "recta/error.hpp"

namespace recta {

/// A vector over GF(2) of length <= 64, packed into one machine word.
/// Coordinate i (0-indexed) lives in bit i; all I/O is 1-indexed.
struct BitVec {
  std::uint64_t bits = 0;
  int len = 0;

  BitVec() = default;
  BitVec(std::uint64_t b, int n) : bits(b), len(n) {
    if (n < 0 || n > 64) throw error(errc::bad_input, "length must be in [0,64]");
    if (n < 64) bits &= mask(n);
  }

  static std::uint64_t mask(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }

  bool get(int i) const { return (bits >> i) & 1; }
  int weight() const { return std::popcount(bits); }
  bool even() const { return (weight() & 1) == 0; }

  BitVec operator^(const BitVec& o) const {
    if (len != o.len) throw error(errc::length_mismatch, "xor of unequal lengths");
    return BitVec(bits ^ o.bits, len);
  }
  bool operator==(const BitVec& o) const { return len == o.len && bits == o.bits; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
};

inline BitVec zero_vec(int n) { return BitVec(0, n); }
inline BitVec ones_vec(int n) { return BitVec(BitVec::mask(n), n); }

/// e_i: weight-1 vector, 1-indexed coordinate.
inline BitVec unit_vec(int n, int i) {
  if (i < 1 || i > n) throw error(errc::bad_input, "unit coordinate out of range");
  return BitVec(1ull << (i - 1), n);
}

/// e_{i,j}: weight-2 vector, 1-indexed coordinates.
inline BitVec pair_vec(int n, int i, int j) { return unit_vec(n, i) ^ unit_vec(n, j); }

inline int weight(const BitVec& v) { return v.weight(); }

/// Coordinate-1-first rendering: character k of the string is coordinate k+1.
inline std::string to_string(const BitVec& v) {
  std::string s(static_cast<std::size_t>(v.len), '0');
  for (int i = 0; i < v.len; ++i)
    if (v.get(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

inline BitVec parse_bitvec(const std::string& s) {
  if (s.size() > 64) throw error(errc::bad_input, "bit string longer than 64");
  BitVec v(0, static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.bits |= 1ull << i;
    else if (s[i] != '0')
      throw error(errc::bad_input, "bit string must be over {0,1}");
  }
  return v;
}

/// Value of the word read with coordinate 1 as the most significant digit.
/// Orders equal-weight vectors the way coset representatives are tie-broken.
inline std::uint64_t revlex_key(std::uint64_t bits, int n) {
  std::uint64_t x = bits;
  x = ((x & 0x5555555555555555ull) << 1) | ((x >> 1) & 0x5555555555555555ull);
  x = ((x & 0x3333333333333333ull) << 2) | ((x >> 2) & 0x3333333333333333ull);
  x = ((x & 0x0f0f0f0f0f0f0f0full) << 4) | ((x >> 4) & 0x0f0f0f0f0f0f0f0full);
  x = ((x & 0x00ff00ff00ff00ffull) << 8) | ((x >> 8) & 0x00ff00ff00ff00ffull);
  x = ((x & 0x0000ffff0000ffffull) << 16) | ((x >> 16) & 0x0000ffff0000ffffull);
  x = (x << 32) | (x >> 32);
  return x >> (64 - n);
}

/// Gosper's hack: next word with the same popcount, or 0 past the end.
inline std::uint64_t next_same_weight(std::uint64_t v) {
  std::uint64_t c = v & (~v + 1), r = v + c;
  if (r == 0) return 0;
  return (((r ^ v) >> 2) / c) | r;
}

// Colex rank of the 2-subset {i,j}, 0-indexed points, i < j.
inline std::uint32_t pair_rank(std::uint32_t i, std::uint32_t j) {
  return j * (j - 1) / 2 + i;
}

inline std::pair<std::uint32_t, std::uint32_t> pair_unrank(std::uint32_t r) {
  std::uint32_t j = 1;
  while ((j + 1) * j / 2 <= r) ++j;
  return {r - j * (j - 1) / 2, j};
}

}  // namespace recta
