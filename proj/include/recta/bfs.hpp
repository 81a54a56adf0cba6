#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "recta/graph.hpp"

namespace recta {

/// Marker for vertices a BFS never reaches.
constexpr std::int32_t kUnreachable = -1;

inline std::vector<std::int32_t> bfs_distances(const Graph& g, std::uint32_t src) {
  std::uint32_t n = g.num_vertices();
  std::vector<std::int32_t> dist(n, kUnreachable);
  if (g.rep() == Graph::Rep::cube) {
    // Hamming distance is the graph distance on Q_n.
    for (std::uint32_t v = 0; v < n; ++v) dist[v] = std::popcount(v ^ src);
    return dist;
  }
  std::vector<std::uint32_t> q;
  q.reserve(n);
  q.push_back(src);
  dist[src] = 0;
  std::vector<std::uint32_t> nb;
  for (std::size_t head = 0; head < q.size(); ++head) {
    std::uint32_t u = q[head];
    g.neighbors(u, nb);
    for (auto v : nb)
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

inline std::vector<std::vector<std::uint32_t>> connected_components(const Graph& g) {
  std::uint32_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> comps;
  std::vector<std::uint32_t> nb;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> comp = {s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      g.neighbors(comp[head], nb);
      for (auto v : nb)
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Distance shells from a source, with the sets of c_i/a_i/b_i values
/// observed over each shell: for v at distance i from u these count the
/// neighbours of v at distance i-1, i, i+1 from u.
struct DistanceProfile {
  std::uint32_t source = 0;
  std::vector<std::uint64_t> shell_sizes;
  std::vector<std::set<std::uint32_t>> c_values, a_values, b_values;  // index i >= 1
  int diameter() const { return static_cast<int>(shell_sizes.size()) - 1; }
};

inline DistanceProfile distance_profile(const Graph& g, std::uint32_t src) {
  auto dist = bfs_distances(g, src);
  std::int32_t diam = 0;
  for (auto d : dist)
    if (d > diam) diam = d;
  DistanceProfile p;
  p.source = src;
  p.shell_sizes.assign(static_cast<std::size_t>(diam) + 1, 0);
  p.c_values.assign(static_cast<std::size_t>(diam) + 1, {});
  p.a_values.assign(static_cast<std::size_t>(diam) + 1, {});
  p.b_values.assign(static_cast<std::size_t>(diam) + 1, {});
  std::vector<std::uint32_t> nb;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] == kUnreachable) continue;
    ++p.shell_sizes[static_cast<std::size_t>(dist[v])];
    if (dist[v] == 0) continue;
    std::uint32_t c = 0, a = 0, b = 0;
    g.neighbors(v, nb);
    for (auto w : nb) {
      if (dist[w] == dist[v] - 1)
        ++c;
      else if (dist[w] == dist[v])
        ++a;
      else
        ++b;
    }
    std::size_t i = static_cast<std::size_t>(dist[v]);
    p.c_values[i].insert(c);
    p.a_values[i].insert(a);
    p.b_values[i].insert(b);
  }
  return p;
}

/// Shortest cycle length via per-vertex BFS; empty optional means acyclic.
inline std::optional<std::uint32_t> girth(const Graph& g) {
  std::uint32_t n = g.num_vertices();
  if (g.rep() != Graph::Rep::explicit_adj)
    throw error(errc::too_large, "girth needs an explicit graph");
  std::uint32_t best = 0;
  bool found = false;
  std::vector<std::int32_t> dist(n);
  std::vector<std::uint32_t> parent(n), q;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    q.clear();
    q.push_back(s);
    dist[s] = 0;
    parent[s] = s;
    for (std::size_t head = 0; head < q.size(); ++head) {
      std::uint32_t u = q[head];
      if (found && dist[u] * 2 + 1 >= static_cast<std::int32_t>(best)) break;
      const std::uint32_t* nb = g.row(u);
      for (std::uint32_t k = 0; k < g.degree(u); ++k) {
        std::uint32_t v = nb[k];
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u] && dist[v] >= dist[u]) {
          std::uint32_t len = static_cast<std::uint32_t>(dist[u] + dist[v]) + 1;
          if (!found || len < best) {
            best = len;
            found = true;
          }
        }
      }
    }
  }
  if (!found) return std::nullopt;
  return best;
}

/// Two-colouring of a connected graph; empty optional when an odd cycle
/// exists.
inline std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  std::uint32_t n = g.num_vertices();
  std::vector<std::uint8_t> side(n, 2);
  std::vector<std::uint32_t> q, nb;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    q.clear();
    q.push_back(s);
    for (std::size_t head = 0; head < q.size(); ++head) {
      std::uint32_t u = q[head];
      g.neighbors(u, nb);
      for (auto v : nb) {
        if (side[v] == 2) {
          side[v] = side[u] ^ 1;
          q.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace recta
