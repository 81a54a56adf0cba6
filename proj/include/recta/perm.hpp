#pragma once

#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "recta/bitvec.hpp"
#include "recta/error.hpp"
#include "recta/linear_code.hpp"

namespace recta {

/// A permutation of {0..degree-1} stored as an image table, acting on the
/// right: point p maps to img[p]. All file I/O is 1-indexed.
struct Perm {
  std::vector<std::uint32_t> img;

  Perm() = default;
  explicit Perm(std::uint32_t degree) : img(degree) {
    std::iota(img.begin(), img.end(), 0u);
  }
  explicit Perm(std::vector<std::uint32_t> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (auto v : img) {
      if (v >= img.size() || seen[v]) throw error(errc::bad_input, "images are not a bijection");
      seen[v] = true;
    }
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img.size()); }
  std::uint32_t operator()(std::uint32_t p) const { return img[p]; }
  bool is_identity() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  /// this followed by o (right action composition).
  Perm then(const Perm& o) const {
    if (degree() != o.degree()) throw error(errc::degree_mismatch, "compose degree mismatch");
    Perm r;
    r.img.resize(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) r.img[i] = o.img[img[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) r.img[img[i]] = i;
    return r;
  }

  bool operator==(const Perm& o) const { return img == o.img; }
};

/// Build from disjoint cycles over 1-indexed points.
inline Perm perm_from_cycles(std::uint32_t degree,
                             const std::vector<std::vector<std::uint32_t>>& cycles) {
  Perm p(degree);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 1 || c[k] > degree) throw error(errc::bad_input, "cycle point out of range");
      p.img[c[k] - 1] = c[(k + 1) % c.size()] - 1;
    }
  return Perm(std::move(p.img));
}

/// Coordinate action x^sigma on GF(2)^n: coordinate i of the result is
/// coordinate i^(sigma^-1) of v, i.e. bit i of v lands in position sigma(i).
inline BitVec permute_coordinates(const BitVec& v, const Perm& sigma) {
  if (static_cast<std::uint32_t>(v.len) != sigma.degree())
    throw error(errc::degree_mismatch, "permutation degree != vector length");
  BitVec out(0, v.len);
  std::uint64_t bits = v.bits;
  while (bits) {
    int i = std::countr_zero(bits);
    bits &= bits - 1;
    out.bits |= 1ull << sigma.img[static_cast<std::uint32_t>(i)];
  }
  return out;
}

inline std::uint64_t permute_word(std::uint64_t w, const Perm& sigma) {
  std::uint64_t out = 0;
  while (w) {
    int i = std::countr_zero(w);
    w &= w - 1;
    out |= 1ull << sigma.img[static_cast<std::uint32_t>(i)];
  }
  return out;
}

/// sigma stabilises C setwise iff it maps every basis row back into C.
inline bool is_code_automorphism(const Perm& sigma, const LinearCode& c) {
  if (sigma.degree() != static_cast<std::uint32_t>(c.length()))
    throw error(errc::degree_mismatch, "permutation degree != code length");
  for (auto r : c.rows())
    if (!c.contains(permute_word(r, sigma))) return false;
  return true;
}

// --- generator file format: "degree count", then one permutation per line
// in image notation, 1-indexed.

inline std::string write_generators(const std::vector<Perm>& gens) {
  std::ostringstream os;
  std::uint32_t deg = gens.empty() ? 0 : gens[0].degree();
  os << deg << ' ' << gens.size() << '\n';
  for (const auto& g : gens) {
    for (std::uint32_t i = 0; i < deg; ++i) os << (i ? " " : "") << g.img[i] + 1;
    os << '\n';
  }
  return os.str();
}

inline std::vector<Perm> parse_generators(std::istream& in) {
  std::uint32_t deg = 0, count = 0;
  if (!(in >> deg >> count)) throw error(errc::bad_input, "generator header must be 'degree count'");
  std::vector<Perm> gens;
  for (std::uint32_t k = 0; k < count; ++k) {
    std::vector<std::uint32_t> img(deg);
    for (auto& v : img) {
      if (!(in >> v) || v < 1 || v > deg) throw error(errc::bad_input, "bad image entry");
      --v;
    }
    gens.emplace_back(std::move(img));
  }
  return gens;
}

inline std::vector<Perm> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_input, "cannot open generator file " + path);
  return parse_generators(in);
}

}  // namespace recta
