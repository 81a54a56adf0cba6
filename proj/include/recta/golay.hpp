#pragma once

#include "recta/linear_code.hpp"

namespace recta {

inline LinearCode zero_code(int n) { return LinearCode::from_rows(n, {}); }

inline LinearCode repetition_code(int n) {
  return LinearCode::from_rows(n, {ones_vec(n)});
}

/// Extended binary Golay code [24,12,8], built by extending the length-23
/// quadratic-residue cyclic code with an overall parity coordinate.
/// Coordinate i <= 23 carries the exponent i-1 of the cyclic structure and
/// coordinate 24 is the parity extension. The construction is committed
/// here as data; its parameters, self-duality and M24-invariance are
/// re-verified in the test suite.
inline const LinearCode& golay24() {
  static const LinearCode code = [] {
    // taps of the degree-11 generator polynomial of the QR code mod 23
    static constexpr int taps[] = {0, 2, 4, 5, 6, 10, 11};
    std::vector<BitVec> rows;
    for (int shift = 0; shift < 12; ++shift) {
      std::uint64_t w = 0;
      for (int t : taps) w |= 1ull << ((t + shift) % 23);
      w |= static_cast<std::uint64_t>(std::popcount(w) & 1) << 23;
      rows.emplace_back(w, 24);
    }
    return LinearCode::from_rows(24, rows);
  }();
  return code;
}

/// Binary Golay code [23,12,7]: the extended code punctured at coordinate 24.
inline const LinearCode& golay23() {
  static const LinearCode code = puncture(golay24(), 24);
  return code;
}

/// The even-weight subcode of the binary Golay code, a [23,11,8]-code.
inline const LinearCode& golay23_even() {
  static const LinearCode code = even_subcode(golay23());
  return code;
}

}  // namespace recta
