#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "recta/bfs.hpp"
#include "recta/graph.hpp"

namespace recta {

namespace detail {
constexpr std::uint32_t kDerivedCap = 1u << 16;

inline void require_explicit_small(const Graph& g, const char* what) {
  if (g.rep() != Graph::Rep::explicit_adj || g.num_vertices() > kDerivedCap)
    throw error(errc::too_large, std::string(what) + " needs an explicit graph of moderate size");
}
}  // namespace detail

/// Graph on the same vertices, adjacent iff at distance exactly k.
inline Graph distance_k_graph(const Graph& g, int k) {
  detail::require_explicit_small(g, "distance_k_graph");
  if (k < 1) throw error(errc::bad_input, "distance_k_graph needs k >= 1");
  std::uint32_t n = g.num_vertices();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    auto dist = bfs_distances(g, u);
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (dist[v] == k) edges.emplace_back(u, v);
  }
  Graph out = Graph::make_explicit(n, std::move(edges));
  if (g.label_kind() != LabelKind::none) out.set_labels(g.label_kind(), g.labels());
  return out;
}

/// Induced subgraph on a sorted vertex subset, labelled by parent ids.
inline Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& verts) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t a = 0; a < verts.size(); ++a)
    for (std::uint32_t b = a + 1; b < verts.size(); ++b)
      if (g.adjacent(verts[a], verts[b])) edges.emplace_back(a, b);
  Graph out = Graph::make_explicit(static_cast<std::uint32_t>(verts.size()), std::move(edges));
  out.set_labels(LabelKind::parent, std::vector<std::uint64_t>(verts.begin(), verts.end()));
  return out;
}

/// The graph induced on the neighbourhood of u, with a parent back-map.
/// Works on implicit graphs too: only degree(u) vertices are touched.
inline Graph induced_neighborhood(const Graph& g, std::uint32_t u) {
  std::vector<std::uint32_t> nb;
  g.neighbors(u, nb);
  std::sort(nb.begin(), nb.end());
  return induced_subgraph(g, nb);
}

/// Connected components of the distance 2 graph: two halves for a connected
/// bipartite graph, one component otherwise. Ordered so the component
/// containing vertex 0 comes first; vertices are labelled by parent ids in
/// increasing order.
inline std::vector<Graph> halved_graphs(const Graph& g) {
  detail::require_explicit_small(g, "halved_graphs");
  if (!is_connected(g)) throw error(errc::disconnected, "halved graphs need a connected input");
  Graph d2 = distance_k_graph(g, 2);
  auto comps = connected_components(d2);
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::vector<Graph> out;
  for (const auto& comp : comps) out.push_back(induced_subgraph(d2, comp));
  return out;
}

/// Tensor with K_2: vertices (u, x), edges between (u,0) and (v,1) for every
/// edge uv. Vertex u keeps id u on the even side and u + N on the odd side.
inline Graph bipartite_double(const Graph& g) {
  detail::require_explicit_small(g, "bipartite_double");
  std::uint32_t n = g.num_vertices();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    const std::uint32_t* nb = g.row(u);
    for (std::uint32_t k = 0; k < g.degree(u); ++k) edges.emplace_back(u, nb[k] + n);
  }
  return Graph::make_explicit(2 * n, std::move(edges));
}

struct VertexPartition {
  std::vector<std::uint32_t> block_of;               // vertex -> block index
  std::vector<std::vector<std::uint32_t>> blocks;    // nonempty, disjoint, covering
};

inline VertexPartition partition_from_blocks(std::vector<std::vector<std::uint32_t>> blocks,
                                             std::uint32_t n) {
  VertexPartition p;
  p.block_of.assign(n, n);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw error(errc::bad_input, "partition blocks must be nonempty");
    for (auto v : blocks[b]) {
      if (v >= n || p.block_of[v] != n) throw error(errc::bad_input, "blocks must partition the vertices");
      p.block_of[v] = b;
    }
  }
  for (auto b : p.block_of)
    if (b == n) throw error(errc::bad_input, "blocks must cover the vertices");
  p.blocks = std::move(blocks);
  return p;
}

struct QuotientResult {
  Graph quotient;       // loops dropped from the simple graph, but reported below
  bool has_loops = false;
  bool covering = false;  // the natural map is a covering per the two conditions
};

/// Quotient by a vertex partition. The natural map is a covering iff no
/// block contains an edge and adjacency between two blocks restricts to a
/// perfect matching.
inline QuotientResult quotient_by_partition(const Graph& g, const VertexPartition& p) {
  detail::require_explicit_small(g, "quotient_by_partition");
  std::uint32_t nb_blocks = static_cast<std::uint32_t>(p.blocks.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  QuotientResult r;
  bool internal_edge = false;
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u) {
    const std::uint32_t* nb = g.row(u);
    for (std::uint32_t k = 0; k < g.degree(u); ++k) {
      std::uint32_t bu = p.block_of[u], bv = p.block_of[nb[k]];
      if (bu == bv) {
        r.has_loops = true;
        internal_edge = true;
      } else if (bu < bv) {
        edges.emplace_back(bu, bv);
      }
    }
  }
  r.quotient = Graph::make_explicit(nb_blocks, std::move(edges));
  r.covering = !internal_edge;
  if (r.covering) {
    // unique-neighbour condition across every quotient edge
    for (std::uint32_t b1 = 0; b1 < nb_blocks && r.covering; ++b1) {
      const std::uint32_t* qnb = r.quotient.row(b1);
      for (std::uint32_t k = 0; k < r.quotient.degree(b1) && r.covering; ++k) {
        std::uint32_t b2 = qnb[k];
        for (auto x : p.blocks[b1]) {
          std::uint32_t count = 0;
          const std::uint32_t* xn = g.row(x);
          for (std::uint32_t t = 0; t < g.degree(x); ++t)
            if (p.block_of[xn[t]] == b2) ++count;
          if (count != 1) {
            r.covering = false;
            break;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace recta
