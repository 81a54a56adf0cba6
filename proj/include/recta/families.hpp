#pragma once

#include <vector>

#include "recta/bitvec.hpp"
#include "recta/coset_space.hpp"
#include "recta/graph.hpp"

namespace recta {

/// Q_n: explicit up to n = 20, implicit beyond (Q_24 has 16.7M vertices and
/// is only ever walked, never stored).
inline Graph hypercube(int n) {
  if (n < 1 || n > 24) throw error(errc::bad_input, "hypercube dimension must be in [1,24]");
  if (n > 20) return Graph::make_cube(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t size = 1u << n;
  for (std::uint32_t x = 0; x < size; ++x)
    for (int i = 0; i < n; ++i) {
      std::uint32_t y = x ^ (1u << i);
      if (x < y) edges.emplace_back(x, y);
    }
  Graph g = Graph::make_explicit(size, std::move(edges));
  std::vector<std::uint64_t> lab(size);
  for (std::uint32_t x = 0; x < size; ++x) lab[x] = x;
  g.set_labels(LabelKind::bitvec, std::move(lab));
  return g;
}

/// T_n on the colex-indexed 2-subsets of [n]; adjacency = intersect in one.
inline Graph triangular(int n) {
  if (n < 2) throw error(errc::bad_input, "triangular graph needs n >= 2");
  std::uint32_t m = static_cast<std::uint32_t>(n) * (n - 1) / 2;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t a = 0; a < m; ++a) {
    auto [i1, j1] = pair_unrank(a);
    for (std::uint32_t b = a + 1; b < m; ++b) {
      auto [i2, j2] = pair_unrank(b);
      int common = (i1 == i2) + (i1 == j2) + (j1 == i2) + (j1 == j2);
      if (common == 1) edges.emplace_back(a, b);
    }
  }
  Graph g = Graph::make_explicit(m, std::move(edges));
  std::vector<std::uint64_t> lab(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    auto [i, j] = pair_unrank(a);
    lab[a] = (static_cast<std::uint64_t>(i) << 32) | j;
  }
  g.set_labels(LabelKind::pair2, std::move(lab));
  return g;
}

inline Graph complete(int n) {
  if (n < 1) throw error(errc::bad_input, "complete graph needs n >= 1");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(n); ++u)
    for (std::uint32_t v = u + 1; v < static_cast<std::uint32_t>(n); ++v) edges.emplace_back(u, v);
  return Graph::make_explicit(static_cast<std::uint32_t>(n), std::move(edges));
}

/// K_{parts[size]}: vertices v with v/size the part index.
inline Graph complete_multipartite(int parts, int size) {
  if (parts < 1 || size < 1) throw error(errc::bad_input, "multipartite parameters must be positive");
  std::uint32_t n = static_cast<std::uint32_t>(parts) * static_cast<std::uint32_t>(size);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (u / static_cast<std::uint32_t>(size) != v / static_cast<std::uint32_t>(size)) edges.emplace_back(u, v);
  return Graph::make_explicit(n, std::move(edges));
}

inline Graph complement(const Graph& g) {
  if (g.rep() != Graph::Rep::explicit_adj) throw error(errc::too_large, "complement needs an explicit graph");
  std::uint32_t n = g.num_vertices();
  if (n > 4096) throw error(errc::too_large, "complement capped at 4096 vertices");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::make_explicit(n, std::move(edges));
}

/// Coset graph of a binary linear code: explicit with canonical-representative
/// labels while the quotient fits (n-r <= 20), the cube itself for the zero
/// code above that, and the implicit syndrome-space form otherwise.
inline Graph coset_graph(const LinearCode& c) {
  int nr = c.length() - c.dimension();
  for (int i = 1; i <= c.length(); ++i)
    if (c.contains(unit_vec(c.length(), i)))
      throw error(errc::loops, "coset graph has loops: some e_i lies in the code");
  if (nr > 24) throw error(errc::quotient_too_large, "more than 2^24 cosets");
  if (nr > 20) {
    if (c.dimension() == 0) return Graph::make_cube(c.length());
    return Graph::make_coset(c);
  }
  CosetSpace cs(c);
  std::uint32_t size = cs.size();
  std::vector<std::uint32_t> esy(static_cast<std::size_t>(c.length()));
  for (int i = 1; i <= c.length(); ++i)
    esy[static_cast<std::size_t>(i - 1)] = c.syndrome(unit_vec(c.length(), i).bits);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t s = 0; s < size; ++s)
    for (auto t : esy) {
      std::uint32_t q = s ^ t;
      if (s < q) edges.emplace_back(s, q);
    }
  Graph g = Graph::make_explicit(size, std::move(edges));
  std::vector<std::uint64_t> lab(size);
  for (std::uint32_t s = 0; s < size; ++s) lab[s] = cs.representative(s);
  g.set_labels(LabelKind::bitvec, std::move(lab));
  return g;
}

/// Sp_{2m}(2) graph: nonzero vectors of GF(2)^m (m even), adjacent when
/// perpendicular under the standard symplectic form
/// B(x,y) = sum x_{2i-1} y_{2i} + x_{2i} y_{2i-1}.
inline Graph symplectic_graph(int m) {
  if (m < 2 || m % 2 || m > 12) throw error(errc::bad_input, "symplectic dimension must be even, in [2,12]");
  std::uint32_t count = (1u << m) - 1;
  auto swap_pairs = [](std::uint32_t y) {
    return ((y & 0x555555u) << 1) | ((y & 0xAAAAAAu) >> 1);
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t x = 1; x <= count; ++x)
    for (std::uint32_t y = x + 1; y <= count; ++y)
      if ((std::popcount(x & swap_pairs(y)) & 1) == 0) edges.emplace_back(x - 1, y - 1);
  Graph g = Graph::make_explicit(count, std::move(edges));
  std::vector<std::uint64_t> lab(count);
  for (std::uint32_t x = 1; x <= count; ++x) lab[x - 1] = x;
  g.set_labels(LabelKind::bitvec, std::move(lab));
  return g;
}

namespace detail {
// Standard elliptic form on GF(2)^6: Q(x) = x1x2 + x3x4 + x5^2 + x5x6 + x6^2,
// which polarises to the symplectic form used above.
inline bool elliptic_q(std::uint32_t x) {
  auto bit = [&](int i) { return (x >> (i - 1)) & 1u; };
  return ((bit(1) & bit(2)) ^ (bit(3) & bit(4)) ^ bit(5) ^ (bit(5) & bit(6)) ^ bit(6)) != 0;
}

inline Graph sp6_induced(const std::vector<std::uint32_t>& keep) {
  Graph sp = symplectic_graph(6);
  std::vector<std::int32_t> pos(64, -1);
  for (std::uint32_t k = 0; k < keep.size(); ++k) pos[keep[k]] = static_cast<std::int32_t>(k);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t a = 0; a < keep.size(); ++a)
    for (std::uint32_t b = a + 1; b < keep.size(); ++b)
      if (sp.adjacent(keep[a] - 1, keep[b] - 1)) edges.emplace_back(a, b);
  Graph g = Graph::make_explicit(static_cast<std::uint32_t>(keep.size()), std::move(edges));
  std::vector<std::uint64_t> lab(keep.begin(), keep.end());
  g.set_labels(LabelKind::bitvec, std::move(lab));
  return g;
}
}  // namespace detail

/// Subgraph of Sp6(2) on the complement of the standard elliptic quadric.
inline Graph sp6_minus_elliptic_quadric() {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t x = 1; x < 64; ++x)
    if (detail::elliptic_q(x)) keep.push_back(x);
  return detail::sp6_induced(keep);
}

/// Subgraph of Sp6(2) on the complement of the hyperplane x1 = 0.
inline Graph sp6_minus_hyperplane() {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t x = 1; x < 64; ++x)
    if (x & 1u) keep.push_back(x);
  return detail::sp6_induced(keep);
}

}  // namespace recta
