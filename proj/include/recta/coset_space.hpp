#pragma once

#include <cstdint>
#include <vector>

#include "recta/linear_code.hpp"

namespace recta {

/// The cosets of a linear code, indexed by syndrome, with canonical
/// representatives: minimum weight, ties broken by the lexicographically
/// smallest bit pattern with coordinate 1 most significant.
class CosetSpace {
 public:
  explicit CosetSpace(LinearCode code) : code_(std::move(code)) {
    int nr = code_.length() - code_.dimension();
    if (nr > 24) throw error(errc::quotient_too_large, "more than 2^24 cosets");
    const std::uint32_t count = 1u << nr;
    reps_.assign(count, kUnset);
    std::uint32_t found = 0;
    const int n = code_.length();
    for (int w = 0; w <= n && found < count; ++w) {
      if (w == 0) {
        reps_[code_.syndrome(0)] = 0;
        ++found;
        continue;
      }
      // Enumerate weight-w revlex keys ascending; the underlying words then
      // appear in canonical tie-break order, so first hit per coset wins.
      std::uint64_t key = (1ull << w) - 1;
      while (key != 0 && key <= BitVec::mask(n)) {
        std::uint64_t v = revlex_key(key, n);  // self-inverse on n-bit words
        std::uint32_t s = code_.syndrome(v);
        if (reps_[s] == kUnset) {
          reps_[s] = v;
          if (++found == count) break;
        }
        key = next_same_weight(key);
      }
    }
  }

  const LinearCode& code() const { return code_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(reps_.size()); }
  std::uint64_t representative(std::uint32_t s) const { return reps_[s]; }
  std::uint32_t syndrome_of(std::uint64_t v) const { return code_.syndrome(v); }
  std::uint32_t syndrome_of(const BitVec& v) const {
    if (v.len != code_.length()) throw error(errc::length_mismatch, "syndrome length mismatch");
    return code_.syndrome(v.bits);
  }

 private:
  static constexpr std::uint64_t kUnset = ~0ull;
  LinearCode code_;
  std::vector<std::uint64_t> reps_;
};

inline CosetSpace coset_space(const LinearCode& c) { return CosetSpace(c); }

}  // namespace recta
