#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "recta/bfs.hpp"
#include "recta/graph.hpp"
#include "recta/recognize.hpp"

namespace recta {

/// A verified covering pi : Q_n -> target with 0 -> base and e_i -> the
/// i-th entry of neighbor_order. image[x] is the target vertex of cube
/// vertex x, for all 2^n cube vertices.
struct CoveringMap {
  int n = 0;
  std::uint32_t base = 0;
  std::vector<std::uint32_t> neighbor_order;
  std::vector<std::uint32_t> image;
};

namespace detail {

constexpr std::uint32_t kNoVertex = 0xFFFFFFFFu;

/// a1 = 0, c2 = 2, a2 = 0, c3 = 3 on the shells around one vertex. This is
/// the hypothesis check used when the target is too large for the full
/// per-vertex sweep; violations further out surface as INCONSISTENT
/// quadrangles during construction.
inline bool base_profile_ok(const Graph& g, std::uint32_t base) {
  auto dist = bfs_distances(g, base);
  std::vector<std::uint32_t> near;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    if (dist[v] >= 1 && dist[v] <= 3) near.push_back(v);
  std::vector<std::uint32_t> nb;
  for (auto v : near) {
    std::uint32_t c = 0, a = 0;
    g.neighbors(v, nb);
    for (auto w : nb) {
      if (dist[w] == dist[v] - 1) ++c;
      if (dist[w] == dist[v]) ++a;
    }
    if (dist[v] == 1 && a != 0) return false;
    if (dist[v] == 2 && (c != 2 || a != 0)) return false;
    if (dist[v] == 3 && c != 3) return false;
  }
  return true;
}

inline bool covering_hypotheses_ok(const Graph& g, std::uint32_t base) {
  if (g.rep() == Graph::Rep::explicit_adj && g.num_vertices() <= 4096)
    return rectagraph_profile_ok(g);
  if (g.rep() == Graph::Rep::explicit_adj && !is_connected(g)) return false;
  return base_profile_ok(g, base);
}

/// The unique common neighbour of a and b other than c, or kNoVertex when
/// the count is not exactly one.
inline std::uint32_t quadrangle_fourth(const Graph& g, std::uint32_t a, std::uint32_t b,
                                       std::uint32_t c) {
  switch (g.rep()) {
    case Graph::Rep::cube: {
      std::uint32_t d = a ^ b ^ c;
      if (std::popcount(a ^ d) == 1 && std::popcount(b ^ d) == 1 && d != c) return d;
      return kNoVertex;
    }
    case Graph::Rep::coset: {
      std::uint32_t found = kNoVertex;
      std::vector<std::uint32_t> nb;
      g.neighbors(a, nb);
      for (auto y : nb) {
        if (y == c || !g.adjacent(y, b)) continue;
        if (found != kNoVertex) return kNoVertex;
        found = y;
      }
      return found;
    }
    case Graph::Rep::explicit_adj: {
      const std::uint32_t* pa = g.row(a);
      const std::uint32_t* ea = pa + g.degree(a);
      const std::uint32_t* pb = g.row(b);
      const std::uint32_t* eb = pb + g.degree(b);
      std::uint32_t found = kNoVertex;
      while (pa != ea && pb != eb) {
        if (*pa < *pb)
          ++pa;
        else if (*pb < *pa)
          ++pb;
        else {
          if (*pa != c) {
            if (found != kNoVertex) return kNoVertex;
            found = *pa;
          }
          ++pa, ++pb;
        }
      }
      return found;
    }
  }
  return kNoVertex;
}

}  // namespace detail

/// Build the covering of a qualifying rectagraph by weight induction:
/// for wt(x) >= 2 with lowest set bits i < j, image(x) is the unique common
/// neighbour of image(x + e_i) and image(x + e_j) other than
/// image(x + e_i + e_j). After filling, every cube edge is checked to map
/// onto a target edge and the n neighbour images of every cube vertex are
/// checked pairwise distinct, which together force the local-bijection
/// invariant and quadrangle consistency for all coordinate pairs.
inline CoveringMap build_covering(const Graph& target, std::uint32_t base,
                                  std::vector<std::uint32_t> neighbor_order = {}) {
  std::uint32_t valency = 0;
  if (!target.is_regular(&valency))
    throw error(errc::hypotheses_fail, "covering target must be regular");
  if (valency < 1 || valency > 24)
    throw error(errc::hypotheses_fail, "covering target valency must be in [1,24]");
  if (!detail::covering_hypotheses_ok(target, base))
    throw error(errc::hypotheses_fail, "target is not a rectagraph with a2=0 and c3=3");
  int n = static_cast<int>(valency);

  std::vector<std::uint32_t> nbrs;
  target.neighbors(base, nbrs);
  std::sort(nbrs.begin(), nbrs.end());
  if (neighbor_order.empty()) {
    // Default order follows the coordinate structure where the graph has
    // one (this is what makes kernel reconstruction from coset graphs
    // return the defining code bit-exactly); otherwise sorted vertex ids.
    switch (target.rep()) {
      case Graph::Rep::cube:
        for (int i = 0; i < target.cube_dim(); ++i) neighbor_order.push_back(base ^ (1u << i));
        break;
      case Graph::Rep::coset:
        for (auto s : target.coordinate_syndromes()) neighbor_order.push_back(base ^ s);
        break;
      case Graph::Rep::explicit_adj:
        if (target.label_kind() == LabelKind::bitvec) {
          neighbor_order = nbrs;
          std::sort(neighbor_order.begin(), neighbor_order.end(),
                    [&](std::uint32_t a, std::uint32_t b) {
                      return target.labels()[a] < target.labels()[b];
                    });
        } else {
          neighbor_order = nbrs;
        }
        break;
    }
  } else {
    auto check = neighbor_order;
    std::sort(check.begin(), check.end());
    if (check != nbrs)
      throw error(errc::bad_input, "neighbor_order must list the neighbours of the base vertex");
  }

  CoveringMap cov;
  cov.n = n;
  cov.base = base;
  cov.neighbor_order = neighbor_order;
  const std::uint64_t size = 1ull << n;
  cov.image.assign(size, detail::kNoVertex);
  cov.image[0] = base;
  for (int i = 0; i < n; ++i) cov.image[1ull << i] = neighbor_order[static_cast<std::size_t>(i)];

  std::uint32_t* img = cov.image.data();
  for (int w = 2; w <= n; ++w) {
    std::uint64_t x = (1ull << w) - 1;
    while (x < size) {
      std::uint64_t lo = x & (~x + 1);
      std::uint64_t rest = x ^ lo;
      std::uint64_t lo2 = rest & (~rest + 1);
      std::uint32_t a = img[x ^ lo];
      std::uint32_t b = img[x ^ lo2];
      std::uint32_t c = img[x ^ lo ^ lo2];
      std::uint32_t d = detail::quadrangle_fourth(target, a, b, c);
      if (d == detail::kNoVertex)
        throw error(errc::inconsistent,
                    "quadrangle closure failed at cube vertex " + std::to_string(x));
      img[x] = d;
      x = next_same_weight(x);
    }
  }

  // Every cube edge maps onto a target edge; swept one flip direction at a
  // time so both image streams stay sequential.
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = 1ull << i;
    for (std::uint64_t x = 0; x < size; ++x) {
      if (x & bit) continue;
      if (!target.adjacent(img[x], img[x | bit]))
        throw error(errc::inconsistent,
                    "cube edge does not map to a target edge at vertex " + std::to_string(x));
    }
  }
  // Neighbour images are pairwise distinct at every cube vertex: for every
  // weight-2 mask m, image[y] != image[y ^ m] for all y.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t m = (1ull << i) | (1ull << j);
      for (std::uint64_t y = 0; y < size; ++y)
        if (img[y] == img[y ^ m])
          throw error(errc::inconsistent,
                      "neighbour images collide at cube vertex " + std::to_string(y));
    }
  // Surjectivity.
  std::vector<bool> hit(target.num_vertices(), false);
  std::uint64_t distinct = 0;
  for (std::uint64_t x = 0; x < size; ++x)
    if (!hit[img[x]]) {
      hit[img[x]] = true;
      ++distinct;
    }
  if (distinct != target.num_vertices())
    throw error(errc::inconsistent, "covering is not onto the target");
  return cov;
}

}  // namespace recta
