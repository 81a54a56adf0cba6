#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "recta/bfs.hpp"
#include "recta/derived.hpp"
#include "recta/graph.hpp"

namespace recta {

// --- rectagraph recognition ------------------------------------------------

struct RectagraphWitness {
  enum class Kind { none, disconnected, triangle, c2_violation };
  Kind kind = Kind::none;
  std::uint32_t u = 0, v = 0, w = 0;  // triangle u,v,w / pair u,v for c2
  std::uint32_t common = 0;           // common-neighbour count for c2 violations
};

struct RectagraphResult {
  bool ok = false;
  RectagraphWitness witness;
  explicit operator bool() const { return ok; }
};

/// Connected, triangle-free, and every pair at distance 2 has exactly two
/// common neighbours (a1 = 0, c2 = 2).
inline RectagraphResult is_rectagraph(const Graph& g) {
  detail::require_explicit_small(g, "is_rectagraph");
  RectagraphResult r;
  if (!is_connected(g)) {
    r.witness.kind = RectagraphWitness::Kind::disconnected;
    return r;
  }
  std::uint32_t n = g.num_vertices();
  for (std::uint32_t u = 0; u < n; ++u) {
    auto dist = bfs_distances(g, u);
    const std::uint32_t* nb = g.row(u);
    for (std::uint32_t i = 0; i < g.degree(u); ++i)
      for (std::uint32_t j = i + 1; j < g.degree(u); ++j)
        if (g.adjacent(nb[i], nb[j])) {
          r.witness = {RectagraphWitness::Kind::triangle, u, nb[i], nb[j], 0};
          return r;
        }
    for (std::uint32_t v = 0; v < n; ++v) {
      if (dist[v] != 2) continue;
      std::uint32_t common = 0;
      const std::uint32_t* vn = g.row(v);
      for (std::uint32_t k = 0; k < g.degree(v); ++k)
        if (dist[vn[k]] == 1) ++common;
      if (common != 2) {
        r.witness = {RectagraphWitness::Kind::c2_violation, u, v, 0, common};
        return r;
      }
    }
  }
  r.ok = true;
  return r;
}

/// Checks a2 = 0 and c3 = 3 at every vertex, on top of the rectagraph
/// conditions; this is the hypothesis set of the covering construction.
inline bool rectagraph_profile_ok(const Graph& g) {
  if (!is_rectagraph(g)) return false;
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u) {
    auto p = distance_profile(g, u);
    if (p.diameter() >= 2 && !(p.a_values[2].empty() || *p.a_values[2].rbegin() == 0)) return false;
    if (p.diameter() >= 3 &&
        !(p.c_values[3].size() == 1 && *p.c_values[3].begin() == 3))
      return false;
  }
  return true;
}

// --- maximal cliques (Bron-Kerbosch with pivoting) --------------------------

namespace detail {

class Bits {
 public:
  explicit Bits(std::uint32_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::uint32_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::uint32_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto x : w_) c += static_cast<std::uint32_t>(std::popcount(x));
    return c;
  }
  std::uint32_t intersect_count(const Bits& o) const {
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += static_cast<std::uint32_t>(std::popcount(w_[k] & o.w_[k]));
    return c;
  }
  Bits and_with(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        f(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint64_t> w_;
};

struct CliqueCtx {
  std::vector<Bits> nbr;
  std::uint32_t min_size = 0;
  std::vector<std::vector<std::uint32_t>>* out = nullptr;
  std::vector<std::uint32_t> stack;

  void expand(Bits P, Bits X) {
    if (P.empty() && X.empty()) {
      if (stack.size() >= min_size) out->push_back(stack);
      return;
    }
    if (stack.size() + P.count() < min_size) return;
    std::uint32_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::uint32_t u) {
      std::uint32_t c = P.intersect_count(nbr[u]);
      if (!have || c > best) {
        have = true;
        best = c;
        pivot = u;
      }
    };
    P.for_each(consider);
    X.for_each(consider);
    std::vector<std::uint32_t> branch;
    P.for_each([&](std::uint32_t v) {
      if (!nbr[pivot].test(v)) branch.push_back(v);
    });
    for (auto v : branch) {
      stack.push_back(v);
      expand(P.and_with(nbr[v]), X.and_with(nbr[v]));
      stack.pop_back();
      P.reset(v);
      X.set(v);
    }
  }
};

}  // namespace detail

/// All maximal cliques of size >= min_size (explicit graphs of moderate size).
inline std::vector<std::vector<std::uint32_t>> maximal_cliques(const Graph& g,
                                                               std::uint32_t min_size) {
  detail::require_explicit_small(g, "maximal_cliques");
  std::uint32_t n = g.num_vertices();
  detail::CliqueCtx ctx;
  ctx.nbr.assign(n, detail::Bits(n));
  for (std::uint32_t u = 0; u < n; ++u) {
    const std::uint32_t* nb = g.row(u);
    for (std::uint32_t k = 0; k < g.degree(u); ++k) ctx.nbr[u].set(nb[k]);
  }
  std::vector<std::vector<std::uint32_t>> out;
  ctx.min_size = min_size;
  ctx.out = &out;
  detail::Bits P(n), X(n);
  for (std::uint32_t v = 0; v < n; ++v) P.set(v);
  ctx.expand(P, X);
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

// --- triangular graph recognition -------------------------------------------

struct TriangularLabeling {
  int n = 0;
  // vertex -> {i, j} with 0 <= i < j < n
  std::vector<std::pair<std::uint32_t, std::uint32_t>> labels;
};

namespace detail {

inline bool verify_triangular_labels(const Graph& g, const TriangularLabeling& t) {
  std::uint32_t N = g.num_vertices();
  if (t.labels.size() != N) return false;
  std::vector<bool> used(static_cast<std::size_t>(t.n) * t.n, false);
  for (auto [i, j] : t.labels) {
    if (!(i < j && j < static_cast<std::uint32_t>(t.n))) return false;
    std::size_t key = static_cast<std::size_t>(i) * t.n + j;
    if (used[key]) return false;
    used[key] = true;
  }
  if (N != static_cast<std::uint32_t>(t.n) * (t.n - 1) / 2) return false;
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = a + 1; b < N; ++b) {
      auto [i1, j1] = t.labels[a];
      auto [i2, j2] = t.labels[b];
      int common = (i1 == i2) + (i1 == j2) + (j1 == i2) + (j1 == j2);
      if (g.adjacent(a, b) != (common == 1)) return false;
    }
  return true;
}

}  // namespace detail

/// If g is isomorphic to a triangular graph T_n, return n together with a
/// 2-subset labeling realising the isomorphism (always re-verified before
/// returning). T_2, T_3, T_4 are special-cased; for n >= 5 the size-(n-1)
/// maximal cliques are the "stars" of the n points, each vertex lies on
/// exactly two, and the star pair is the label.
inline std::optional<TriangularLabeling> recognize_triangular(const Graph& g) {
  std::uint32_t N = g.num_vertices();
  auto checked = [&](TriangularLabeling t) -> std::optional<TriangularLabeling> {
    if (detail::verify_triangular_labels(g, t)) return t;
    return std::nullopt;
  };
  if (N == 1) return checked({2, {{0, 1}}});
  if (N == 3) return checked({3, {{0, 1}, {0, 2}, {1, 2}}});
  if (N == 6) {
    // T_4 = K_{3[2]}: the non-neighbour of each vertex is unique; label the
    // three complement pairs by the three pairings of {0,1,2,3}.
    TriangularLabeling t;
    t.n = 4;
    t.labels.assign(6, {0, 0});
    static constexpr std::pair<std::uint32_t, std::uint32_t> kPairings[3][2] = {
        {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    std::vector<bool> done(6, false);
    int part = 0;
    for (std::uint32_t v = 0; v < 6; ++v) {
      if (done[v]) continue;
      if (part == 3 || g.degree(v) != 4) return std::nullopt;
      std::uint32_t other = 6;
      for (std::uint32_t w = 0; w < 6; ++w)
        if (w != v && !g.adjacent(v, w)) other = w;
      if (other == 6 || done[other]) return std::nullopt;
      t.labels[v] = kPairings[part][0];
      t.labels[other] = kPairings[part][1];
      done[v] = done[other] = true;
      ++part;
    }
    return checked(t);
  }
  // N must be a triangular number C(n,2) with n >= 5
  std::uint32_t n = 5;
  while (n * (n - 1) / 2 < N) ++n;
  if (n * (n - 1) / 2 != N) return std::nullopt;
  std::uint32_t valency = 0;
  if (!g.is_regular(&valency) || valency != 2 * (n - 2)) return std::nullopt;
  auto stars = maximal_cliques(g, n - 1);
  // keep only size n-1 (larger maximal cliques cannot occur in T_n, and any
  // candidate failing that shape is rejected here)
  std::erase_if(stars, [&](const auto& c) { return c.size() != static_cast<std::size_t>(n - 1); });
  if (stars.size() != n) return std::nullopt;
  std::sort(stars.begin(), stars.end());
  TriangularLabeling t;
  t.n = static_cast<int>(n);
  t.labels.assign(N, {0, 0});
  std::vector<std::uint32_t> seen(N, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> on(N, {0, 0});
  for (std::uint32_t s = 0; s < stars.size(); ++s)
    for (auto v : stars[s]) {
      if (seen[v] == 0)
        on[v].first = s;
      else if (seen[v] == 1)
        on[v].second = s;
      ++seen[v];
    }
  for (std::uint32_t v = 0; v < N; ++v) {
    if (seen[v] != 2) return std::nullopt;
    t.labels[v] = on[v];
  }
  return checked(t);
}

/// Common local parameter n when every vertex neighbourhood is T_n.
inline std::optional<int> is_locally_triangular(const Graph& g) {
  if (!is_connected(g)) throw error(errc::disconnected, "is_locally_triangular needs a connected graph");
  std::optional<int> n;
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u) {
    auto t = recognize_triangular(induced_neighborhood(g, u));
    if (!t) return std::nullopt;
    if (n && *n != t->n) return std::nullopt;
    n = t->n;
  }
  return n;
}

}  // namespace recta
