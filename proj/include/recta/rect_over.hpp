#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "recta/families.hpp"
#include "recta/recognize.hpp"

namespace recta {

/// The bipartite rectagraph over a connected locally triangular graph:
/// parts are the vertices and the n-cliques, with incidence as adjacency.
/// Cliques are read off the local labelings ({u} together with the star of
/// a point of T_n inside the neighbourhood of u), never found by global
/// clique search. Vertices 0..N-1 are the input vertices; the cliques
/// follow. The output is verified to be a bipartite rectagraph with c3 = 3.
/// For locally T_n with n <= 4 the lift is the n-cube.
inline Graph rectagraph_over(const Graph& g) {
  auto n_opt = is_locally_triangular(g);
  if (!n_opt) throw error(errc::not_locally_triangular, "input is not locally triangular");
  int n = *n_opt;
  if (n <= 4) return hypercube(n);

  std::uint32_t N = g.num_vertices();
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cliques;  // keyed by hash
  std::vector<std::vector<std::uint32_t>> clique_list;
  auto key_of = [](const std::vector<std::uint32_t>& c) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : c) {
      h ^= v + 1;
      h *= 1099511628211ull;
    }
    return h;
  };
  std::unordered_map<std::uint64_t, std::uint32_t> clique_id;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  for (std::uint32_t u = 0; u < N; ++u) {
    Graph local = induced_neighborhood(g, u);
    auto t = recognize_triangular(local);
    if (!t || t->n != n) throw error(errc::not_locally_triangular, "local structure changed underfoot");
    const auto& parent = local.labels();
    // star of point p = local vertices whose label contains p
    for (int p = 0; p < n; ++p) {
      std::vector<std::uint32_t> clique = {u};
      for (std::uint32_t lv = 0; lv < local.num_vertices(); ++lv)
        if (t->labels[lv].first == static_cast<std::uint32_t>(p) ||
            t->labels[lv].second == static_cast<std::uint32_t>(p))
          clique.push_back(static_cast<std::uint32_t>(parent[lv]));
      std::sort(clique.begin(), clique.end());
      if (clique.size() != static_cast<std::size_t>(n))
        throw error(errc::inconsistent, "star does not have n vertices");
      std::uint64_t key = key_of(clique);
      auto it = clique_id.find(key);
      std::uint32_t id;
      if (it == clique_id.end()) {
        id = static_cast<std::uint32_t>(clique_list.size());
        clique_id.emplace(key, id);
        clique_list.push_back(clique);
      } else {
        id = it->second;
        if (clique_list[id] != clique) throw error(errc::inconsistent, "clique hash collision");
      }
      edges.emplace_back(u, N + id);
    }
  }
  if (clique_list.size() != N)
    throw error(errc::inconsistent, "clique count does not match the vertex count");

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph pi = Graph::make_explicit(N + static_cast<std::uint32_t>(clique_list.size()), std::move(edges));

  if (!bipartition(pi)) throw error(errc::inconsistent, "lift is not bipartite");
  if (pi.num_vertices() <= 8192) {
    if (!rectagraph_profile_ok(pi))
      throw error(errc::inconsistent, "lift fails the rectagraph or c3 = 3 conditions");
  } else if (!is_rectagraph(pi) || !detail::base_profile_ok(pi, 0)) {
    throw error(errc::inconsistent, "lift fails the rectagraph or c3 = 3 conditions");
  }
  return pi;
}

}  // namespace recta
