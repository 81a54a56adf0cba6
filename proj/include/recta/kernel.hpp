#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "recta/covering.hpp"
#include "recta/linear_code.hpp"
#include "recta/perm.hpp"

namespace recta {

/// The fibre over the base vertex of a covering, with its reconstructed
/// structure: a linear code when the fibre is addition-closed (it then
/// equals the kernel of the covering intersected with the translations),
/// or a coordinate-permutation twist per fibre element when it is not.
struct KernelReport {
  int n = 0;
  std::uint64_t fibre_size = 0;
  bool linear = false;
  std::vector<std::uint64_t> fibre;
  LinearCode code;                      // meaningful when linear
  std::vector<std::uint32_t> iso_tab;   // syndrome -> target vertex, when linear
  std::vector<Perm> twists;             // per fibre element, when not linear
};

inline KernelReport kernel_report(const CoveringMap& cov, const Graph& target) {
  KernelReport rep;
  rep.n = cov.n;
  const std::uint64_t size = 1ull << cov.n;
  for (std::uint64_t x = 0; x < size; ++x)
    if (cov.image[x] == cov.base) rep.fibre.push_back(x);
  rep.fibre_size = rep.fibre.size();
  if (rep.fibre_size * target.num_vertices() != size)
    throw error(errc::inconsistent, "fibre size does not divide the cube order");

  std::vector<BitVec> rows;
  for (auto f : rep.fibre) rows.emplace_back(f, cov.n);
  LinearCode span = LinearCode::from_rows(cov.n, rows);
  rep.linear = (1ull << span.dimension()) == rep.fibre_size;

  if (rep.linear) {
    rep.code = span;
    // The quotient identification: x + C -> image(x) must be well defined,
    // bijective onto the target, and carry coset-graph edges to edges.
    std::uint32_t cosets = 1u << (cov.n - span.dimension());
    rep.iso_tab.assign(cosets, detail::kNoVertex);
    for (std::uint64_t x = 0; x < size; ++x) {
      std::uint32_t s = span.syndrome(x);
      if (rep.iso_tab[s] == detail::kNoVertex)
        rep.iso_tab[s] = cov.image[x];
      else if (rep.iso_tab[s] != cov.image[x])
        throw error(errc::inconsistent, "coset map is not well defined");
    }
    std::vector<bool> hit(target.num_vertices(), false);
    for (auto t : rep.iso_tab) {
      if (t == detail::kNoVertex || hit[t])
        throw error(errc::inconsistent, "coset map is not a bijection");
      hit[t] = true;
    }
    for (int i = 1; i <= cov.n; ++i) {
      std::uint32_t es = span.syndrome(unit_vec(cov.n, i).bits);
      for (std::uint32_t s = 0; s < cosets; ++s)
        if (!target.adjacent(rep.iso_tab[s], rep.iso_tab[s ^ es]))
          throw error(errc::inconsistent, "coset map does not preserve adjacency");
    }
  } else {
    // Twist extraction: for fibre element y there is a coordinate
    // permutation with image(e_i) = image(y + e_{i^sigma}).
    std::vector<std::int32_t> nbr_index(target.num_vertices(), -1);
    for (int i = 0; i < cov.n; ++i)
      nbr_index[cov.image[1ull << i]] = i;
    for (auto y : rep.fibre) {
      std::vector<std::uint32_t> img(static_cast<std::size_t>(cov.n));
      for (int j = 0; j < cov.n; ++j) {
        std::int32_t i = nbr_index[cov.image[y ^ (1ull << j)]];
        if (i < 0) throw error(errc::inconsistent, "fibre neighbour misses the base neighbourhood");
        img[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(j);
      }
      rep.twists.emplace_back(std::move(img));
    }
  }
  return rep;
}

/// End-to-end code reconstruction from a qualifying rectagraph.
inline LinearCode reconstruct_code(const Graph& target, std::uint32_t base) {
  CoveringMap cov = build_covering(target, base);
  KernelReport rep = kernel_report(cov, target);
  if (!rep.linear) throw error(errc::non_linear_kernel, "covering kernel is not a linear code");
  return rep.code;
}

/// The reconstructed code is invariant under every generator and does not
/// contain the even-weight subspace E_n (tested exactly: E_n is spanned by
/// the vectors e_1 + e_j).
inline bool kernel_invariance_check(const KernelReport& rep, const std::vector<Perm>& h_gens) {
  if (!rep.linear) throw error(errc::bad_input, "kernel invariance needs a linear kernel");
  const LinearCode& c = rep.code;
  for (const auto& g : h_gens)
    if (!is_code_automorphism(g, c)) return false;
  if (c.dimension() >= c.length() - 1) {
    bool contains_en = true;
    for (int j = 2; j <= c.length() && contains_en; ++j)
      if (!c.contains(pair_vec(c.length(), 1, j))) contains_en = false;
    if (contains_en) return false;
  }
  return true;
}

inline nlohmann::ordered_json to_json(const LinearCode& c) {
  nlohmann::ordered_json j;
  j["n"] = c.length();
  j["r"] = c.dimension();
  auto rows = nlohmann::ordered_json::array();
  for (auto r : c.rows()) rows.push_back(to_string(BitVec(r, c.length())));
  j["rows"] = rows;
  return j;
}

inline nlohmann::ordered_json to_json(const KernelReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["fibre_size"] = rep.fibre_size;
  j["linear"] = rep.linear;
  if (rep.linear) {
    j["code"] = to_json(rep.code);
  } else {
    auto tw = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < rep.twists.size(); ++k) {
      nlohmann::ordered_json t;
      t["fibre_element"] = to_string(BitVec(rep.fibre[k], rep.n));
      auto img = nlohmann::ordered_json::array();
      for (auto v : rep.twists[k].img) img.push_back(v + 1);
      t["sigma"] = img;
      tw.push_back(t);
    }
    j["twists"] = tw;
  }
  return j;
}

}  // namespace recta
