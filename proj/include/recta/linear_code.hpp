#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "recta/bitvec.hpp"
#include "recta/error.hpp"

namespace recta {

/// A binary linear code held in reduced row-echelon form. The RREF basis
/// (pivot columns increasing, each pivot column cleared from every other
/// row) is unique for the row space, so two codes are set-equal exactly
/// when their LinearCode values compare equal.
class LinearCode {
 public:
  LinearCode() = default;

  static LinearCode from_rows(int n, const std::vector<BitVec>& rows) {
    if (n < 1 || n > 64) throw error(errc::bad_input, "code length must be in [1,64]");
    LinearCode c;
    c.n_ = n;
    for (const auto& r : rows) {
      if (r.len != n) throw error(errc::length_mismatch, "row length != code length");
      c.insert_row(r.bits);
    }
    c.finish();
    return c;
  }

  static LinearCode from_words(int n, const std::vector<std::uint64_t>& words) {
    std::vector<BitVec> rows;
    rows.reserve(words.size());
    for (auto w : words) rows.emplace_back(w, n);
    return from_rows(n, rows);
  }

  int length() const { return n_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Residue of v after elimination by the basis; zero iff v is a codeword.
  std::uint64_t sift(std::uint64_t v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if ((v >> pivots_[k]) & 1) v ^= rows_[k];
    return v;
  }

  bool contains(std::uint64_t v) const { return sift(v) == 0; }
  bool contains(const BitVec& v) const {
    if (v.len != n_) throw error(errc::length_mismatch, "membership length mismatch");
    return contains(v.bits);
  }

  /// Syndrome index: the sift residue packed over the n-r free coordinates,
  /// lowest free coordinate giving the low bit. This is a linear function of
  /// v and is zero exactly on the code, so it indexes the cosets.
  std::uint32_t syndrome(std::uint64_t v) const {
    std::uint64_t res = sift(v);
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < free_.size(); ++k) s |= static_cast<std::uint32_t>((res >> free_[k]) & 1) << k;
    return s;
  }

  /// The member of coset `s` supported on the free coordinates.
  std::uint64_t unpack_syndrome(std::uint32_t s) const {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < free_.size(); ++k)
      if ((s >> k) & 1) v |= 1ull << free_[k];
    return v;
  }

  const std::vector<int>& free_coords() const { return free_; }

  bool is_even() const {
    for (auto r : rows_)
      if (std::popcount(r) & 1) return false;
    return true;
  }

  bool operator==(const LinearCode& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const LinearCode& o) const { return !(*this == o); }

 private:
  void insert_row(std::uint64_t v) {
    v = sift(v);
    if (v == 0) return;
    int p = std::countr_zero(v);
    for (auto& r : rows_)
      if ((r >> p) & 1) r ^= v;
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), v);
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
  }

  void finish() {
    free_.clear();
    std::size_t k = 0;
    for (int i = 0; i < n_; ++i) {
      if (k < pivots_.size() && pivots_[k] == i)
        ++k;
      else
        free_.push_back(i);
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> rows_;   // RREF, sorted by pivot
  std::vector<int> pivots_;
  std::vector<int> free_;
};

inline LinearCode code_from_rows(int n, const std::vector<BitVec>& rows) {
  return LinearCode::from_rows(n, rows);
}

/// Enumerate all codewords in Gray-code order and call f(word) on each
/// (including 0). Guarded for dimension <= 16.
template <class F>
void for_each_codeword(const LinearCode& c, F&& f) {
  if (c.dimension() > 16)
    throw error(errc::dimension_too_large, "codeword enumeration needs dimension <= 16");
  std::uint64_t cur = 0;
  f(cur);
  const auto& rows = c.rows();
  std::uint64_t total = 1ull << c.dimension();
  for (std::uint64_t k = 1; k < total; ++k) {
    cur ^= rows[static_cast<std::size_t>(std::countr_zero(k))];
    f(cur);
  }
}

/// Minimum weight of the nonzero codewords; empty optional encodes infinity
/// (the zero code).
inline std::optional<int> min_distance(const LinearCode& c) {
  if (c.dimension() == 0) return std::nullopt;
  int best = c.length() + 1;
  for_each_codeword(c, [&](std::uint64_t w) {
    if (w != 0) best = std::min(best, std::popcount(w));
  });
  return best;
}

inline std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
  std::vector<std::uint64_t> wd(static_cast<std::size_t>(c.length()) + 1, 0);
  for_each_codeword(c, [&](std::uint64_t w) { ++wd[static_cast<std::size_t>(std::popcount(w))]; });
  return wd;
}

inline bool is_even(const LinearCode& c) { return c.is_even(); }

/// C intersected with the even-weight subspace E_n.
inline LinearCode even_subcode(const LinearCode& c) {
  if (c.is_even()) return c;
  std::vector<BitVec> rows;
  std::uint64_t odd = 0;
  for (auto r : c.rows()) {
    if (std::popcount(r) & 1) {
      if (odd == 0)
        odd = r;
      else
        rows.emplace_back(r ^ odd, c.length());
    } else {
      rows.emplace_back(r, c.length());
    }
  }
  return LinearCode::from_rows(c.length(), rows);
}

/// Delete one coordinate (1-indexed) from every codeword.
inline LinearCode puncture(const LinearCode& c, int coord) {
  if (coord < 1 || coord > c.length()) throw error(errc::bad_input, "puncture coordinate out of range");
  int b = coord - 1;
  std::uint64_t low = BitVec::mask(b);
  std::vector<BitVec> rows;
  for (auto r : c.rows()) rows.emplace_back((r & low) | ((r >> (b + 1)) << b), c.length() - 1);
  return LinearCode::from_rows(c.length() - 1, rows);
}

/// Every pair of basis rows meets evenly and dim = n/2: C equals its dual.
inline bool is_self_dual(const LinearCode& c) {
  if (2 * c.dimension() != c.length()) return false;
  for (auto a : c.rows())
    for (auto b : c.rows())
      if (std::popcount(a & b) & 1) return false;
  return true;
}

// --- code file format: first line "n r", then r rows of n characters over
// {0,1}, coordinate 1 first.  Written from the RREF basis, so byte-stable.

inline std::string write_code(const LinearCode& c) {
  std::ostringstream os;
  os << c.length() << ' ' << c.dimension() << '\n';
  for (auto r : c.rows()) os << to_string(BitVec(r, c.length())) << '\n';
  return os.str();
}

inline LinearCode parse_code(std::istream& in) {
  int n = 0, r = 0;
  if (!(in >> n >> r)) throw error(errc::bad_input, "code header must be 'n r'");
  std::vector<BitVec> rows;
  for (int i = 0; i < r; ++i) {
    std::string s;
    if (!(in >> s)) throw error(errc::bad_input, "missing code row");
    if (static_cast<int>(s.size()) != n) throw error(errc::bad_input, "code row has wrong length");
    rows.push_back(parse_bitvec(s));
  }
  LinearCode c = LinearCode::from_rows(n, rows);
  if (c.dimension() != r) throw error(errc::bad_input, "code rows are not independent");
  return c;
}

inline LinearCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_input, "cannot open code file " + path);
  return parse_code(in);
}

}  // namespace recta
