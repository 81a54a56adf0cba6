#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "recta/kernel.hpp"
#include "recta/perm_group.hpp"
#include "recta/rect_over.hpp"

namespace recta {

namespace detail {

inline bool verify_iso(const Graph& g, const Graph& h, const std::vector<std::uint32_t>& map) {
  std::uint32_t n = g.num_vertices();
  if (h.num_vertices() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  if (g.num_edges() != h.num_edges()) return false;
  std::vector<std::uint32_t> nb;
  for (std::uint32_t u = 0; u < n; ++u) {
    g.neighbors(u, nb);
    for (auto v : nb)
      if (!h.adjacent(map[u], map[v])) return false;
  }
  // edge counts agree and every g-edge maps to an h-edge, so the inverse
  // also carries edges to edges
  return true;
}

// Joint 1-dimensional refinement of colourings on two graphs; colour ids
// stay comparable across the pair. Returns false when class sizes diverge.
struct JointRefiner {
  const Graph* g;
  const Graph* h;

  bool refine(std::vector<std::uint32_t>& cg, std::vector<std::uint32_t>& ch) const {
    std::uint32_t n = g->num_vertices();
    for (;;) {
      using Sig = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
      std::vector<Sig> sg(n), sh(n);
      std::vector<std::uint32_t> nb;
      for (std::uint32_t v = 0; v < n; ++v) {
        sg[v].first = cg[v];
        g->neighbors(v, nb);
        for (auto w : nb) sg[v].second.push_back(cg[w]);
        std::sort(sg[v].second.begin(), sg[v].second.end());
        sh[v].first = ch[v];
        h->neighbors(v, nb);
        for (auto w : nb) sh[v].second.push_back(ch[w]);
        std::sort(sh[v].second.begin(), sh[v].second.end());
      }
      std::map<Sig, std::uint32_t> ids;
      for (std::uint32_t v = 0; v < n; ++v) {
        ids.emplace(sg[v], 0);
        ids.emplace(sh[v], 0);
      }
      std::uint32_t next = 0;
      for (auto& [k, id] : ids) id = next++;
      bool changed = false;
      std::vector<std::uint32_t> ng(n), nh(n);
      for (std::uint32_t v = 0; v < n; ++v) {
        ng[v] = ids[sg[v]];
        nh[v] = ids[sh[v]];
        if (ng[v] != cg[v] || nh[v] != ch[v]) changed = true;
      }
      cg.swap(ng);
      ch.swap(nh);
      std::vector<std::uint32_t> countg(next, 0), counth(next, 0);
      for (std::uint32_t v = 0; v < n; ++v) {
        ++countg[cg[v]];
        ++counth[ch[v]];
      }
      if (countg != counth) return false;
      if (!changed) return true;
    }
  }

  std::optional<std::vector<std::uint32_t>> search(std::vector<std::uint32_t> cg,
                                                   std::vector<std::uint32_t> ch) const {
    if (!refine(cg, ch)) return std::nullopt;
    std::uint32_t n = g->num_vertices();
    std::uint32_t maxc = 0;
    for (auto c : cg) maxc = std::max(maxc, c + 1);
    std::vector<std::uint32_t> size(maxc, 0);
    for (auto c : cg) ++size[c];
    std::uint32_t cell = maxc;
    for (std::uint32_t c = 0; c < maxc; ++c)
      if (size[c] >= 2) {
        cell = c;
        break;
      }
    if (cell == maxc) {
      // discrete: match vertices by colour
      std::vector<std::uint32_t> pos(maxc), map(n);
      for (std::uint32_t v = 0; v < n; ++v) pos[ch[v]] = v;
      for (std::uint32_t v = 0; v < n; ++v) map[v] = pos[cg[v]];
      if (verify_iso(*g, *h, map)) return map;
      return std::nullopt;
    }
    std::uint32_t u = 0;
    while (cg[u] != cell) ++u;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (ch[v] != cell) continue;
      auto cg2 = cg;
      auto ch2 = ch;
      cg2[u] = maxc;
      ch2[v] = maxc;
      if (auto got = search(std::move(cg2), std::move(ch2))) return got;
    }
    return std::nullopt;
  }
};

constexpr std::uint32_t kBacktrackCap = 4096;

inline bool rectagraph_route_applicable(const Graph& g) {
  std::uint32_t val = 0;
  if (!g.is_regular(&val) || val < 1 || val > 24) return false;
  return covering_hypotheses_ok(g, 0);
}

/// Covering route: reconstruct both kernel codes with the default neighbour
/// orders. Equal codes compose the two verified coset identifications into
/// a mapping; unequal codes decide nothing (the codes might differ by a
/// coordinate permutation), signalled by an empty result.
inline std::optional<std::vector<std::uint32_t>> rectagraph_route(const Graph& g, const Graph& h,
                                                                  bool& decided) {
  decided = false;
  CoveringMap cg = build_covering(g, 0);
  KernelReport rg = kernel_report(cg, g);
  CoveringMap ch = build_covering(h, 0);
  KernelReport rh = kernel_report(ch, h);
  if (!rg.linear || !rh.linear) return std::nullopt;
  if (rg.code != rh.code) return std::nullopt;
  decided = true;
  std::vector<std::uint32_t> inv(g.num_vertices());
  for (std::uint32_t s = 0; s < rg.iso_tab.size(); ++s) inv[rg.iso_tab[s]] = s;
  std::vector<std::uint32_t> map(g.num_vertices());
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) map[v] = rh.iso_tab[inv[v]];
  if (g.rep() == Graph::Rep::explicit_adj && g.num_edges() <= (1u << 24) &&
      !verify_iso(g, h, map))
    throw error(errc::inconsistent, "structural mapping failed re-verification");
  return map;
}

}  // namespace detail

/// A vertex bijection g -> h preserving adjacency both ways, or nullopt.
///
/// Small pairs go through joint colour refinement with individualisation
/// backtracking. Pairs too large for that are handled structurally when
/// both sides qualify: rectagraphs with a2 = 0 and c3 = 3 are compared by
/// reconstructing their kernel codes (the coset identification of each side
/// is edge-verified, and equal codes compose into an explicit mapping);
/// connected locally triangular graphs are lifted to their bipartite
/// rectagraphs first. Anything else over the size cap is refused.
inline std::optional<std::vector<std::uint32_t>> isomorphic(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  if (g.num_vertices() == 0) return std::vector<std::uint32_t>{};
  {
    std::vector<std::uint32_t> dg, dh;
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
      dg.push_back(g.degree(v));
      dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
  }

  // Covering route first: exact and fast whenever both sides qualify and
  // their default neighbour orders align the kernels.
  if (detail::rectagraph_route_applicable(g) && detail::rectagraph_route_applicable(h)) {
    bool decided = false;
    auto got = detail::rectagraph_route(g, h, decided);
    if (decided) return got;
  } else if (g.num_vertices() > detail::kBacktrackCap && is_connected(g) && is_connected(h)) {
    // Locally triangular pairs above the backtracking cap: lift to the
    // bipartite rectagraphs and restrict the lift mapping to the base parts.
    auto ng = is_locally_triangular(g);
    auto nh = is_locally_triangular(h);
    if (ng && nh && *ng == *nh && *ng >= 5) {
      Graph pg = rectagraph_over(g);
      Graph ph = rectagraph_over(h);
      bool decided = false;
      auto lift = detail::rectagraph_route(pg, ph, decided);
      if (decided && lift) {
        std::vector<std::uint32_t> map(g.num_vertices());
        for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
          if ((*lift)[v] >= g.num_vertices())
            throw error(errc::inconsistent, "lift mapping does not respect the parts");
          map[v] = (*lift)[v];
        }
        if (!detail::verify_iso(g, h, map))
          throw error(errc::inconsistent, "restricted mapping failed re-verification");
        return map;
      }
      if (decided) return std::nullopt;
    }
  }

  if (g.num_vertices() <= detail::kBacktrackCap &&
      g.rep() == Graph::Rep::explicit_adj && h.rep() == Graph::Rep::explicit_adj) {
    detail::JointRefiner r{&g, &h};
    std::vector<std::uint32_t> cg(g.num_vertices(), 0), ch(h.num_vertices(), 0);
    return r.search(std::move(cg), std::move(ch));
  }
  throw error(errc::too_large, "graphs too large for backtracking and no structural route applies");
}

/// All adjacency-preserving vertex permutations, by exhaustive backtracking.
inline PermGroup brute_force_automorphisms(const Graph& g) {
  std::uint32_t n = g.num_vertices();
  if (n > 10) throw error(errc::too_large, "brute force automorphisms capped at 10 vertices");
  std::vector<Perm> autos;
  std::vector<std::uint32_t> map(n, n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::uint32_t u) -> void {
    if (u == n) {
      autos.emplace_back(map);
      return;
    }
    for (std::uint32_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::uint32_t p = 0; p < u && ok; ++p)
        if (g.adjacent(p, u) != g.adjacent(map[p], cand)) ok = false;
      if (!ok) continue;
      map[u] = cand;
      used[cand] = true;
      self(self, u + 1);
      used[cand] = false;
    }
    map[u] = n;
  };
  rec(rec, 0);
  return PermGroup(std::move(autos));
}

}  // namespace recta
