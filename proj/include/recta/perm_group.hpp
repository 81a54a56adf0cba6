#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "recta/error.hpp"
#include "recta/perm.hpp"

namespace recta {

/// Base and strong generating set for a permutation group, built with the
/// deterministic Schreier-Sims algorithm. Base points are chosen as the
/// smallest moved point at each level unless a base prefix is prescribed,
/// so chains (and everything derived from them) are reproducible.
class PermGroup {
 public:
  PermGroup() = default;

  explicit PermGroup(std::vector<Perm> gens, std::vector<std::uint32_t> base_hint = {})
      : gens_(std::move(gens)) {
    if (gens_.empty()) throw error(errc::bad_input, "schreier_sims needs at least one generator");
    degree_ = gens_[0].degree();
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw error(errc::degree_mismatch, "generators of unequal degree");
    for (auto b : base_hint) new_level(b);
    for (const auto& g : gens_) insert_element(g);
    if (levels_.empty()) new_level(0);  // trivial group: single redundant level
    complete_level(0);
  }

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::vector<std::uint32_t> base() const {
    std::vector<std::uint32_t> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  std::vector<std::uint32_t> fundamental_orbit_sizes() const {
    std::vector<std::uint32_t> s;
    for (const auto& l : levels_) s.push_back(static_cast<std::uint32_t>(l.orbit.size()));
    return s;
  }

  unsigned long long order() const {
    unsigned long long o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) throw error(errc::degree_mismatch, "membership degree mismatch");
    auto [res, lvl] = sift(g, 0);
    (void)lvl;
    return res.is_identity();
  }

  /// Strong generators fixing the first `k` base points.
  std::vector<Perm> level_generators(std::size_t k) const {
    if (k >= levels_.size()) return {};
    return levels_[k].gens;
  }

  /// Point stabiliser, returned as a generated group with its own chain.
  PermGroup stabilizer(std::uint32_t point) const {
    PermGroup sub;
    sub.degree_ = degree_;
    PermGroup chain(gens_, {point});
    sub.gens_ = chain.level_generators(1);
    if (sub.gens_.empty()) sub.gens_.push_back(Perm(degree_));
    return PermGroup(sub.gens_);
  }

 private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Perm> gens;                 // strong generators at this level
    std::vector<std::uint32_t> orbit;       // discovered order, orbit[0] == base
    std::vector<std::int32_t> pos;          // point -> orbit index or -1
    std::vector<std::int32_t> via_gen;      // orbit index -> generator used to reach it
    std::vector<std::uint32_t> parent;      // orbit index -> previous point
  };

  void new_level(std::uint32_t base) {
    Level l;
    l.base = base;
    l.pos.assign(degree_, -1);
    l.orbit = {base};
    l.pos[base] = 0;
    l.via_gen = {-1};
    l.parent = {base};
    levels_.push_back(std::move(l));
  }

  void rebuild_orbit(Level& l) const {
    std::fill(l.pos.begin(), l.pos.end(), -1);
    l.orbit = {l.base};
    l.pos[l.base] = 0;
    l.via_gen = {-1};
    l.parent = {l.base};
    for (std::size_t head = 0; head < l.orbit.size(); ++head) {
      std::uint32_t p = l.orbit[head];
      for (std::size_t gi = 0; gi < l.gens.size(); ++gi) {
        std::uint32_t q = l.gens[gi].img[p];
        if (l.pos[q] < 0) {
          l.pos[q] = static_cast<std::int32_t>(l.orbit.size());
          l.orbit.push_back(q);
          l.via_gen.push_back(static_cast<std::int32_t>(gi));
          l.parent.push_back(p);
        }
      }
    }
  }

  /// Transversal element mapping the level base to `point`.
  Perm transversal(const Level& l, std::uint32_t point) const {
    std::vector<std::int32_t> path;
    std::uint32_t p = point;
    while (p != l.base) {
      std::int32_t idx = l.pos[p];
      path.push_back(l.via_gen[static_cast<std::size_t>(idx)]);
      p = l.parent[static_cast<std::size_t>(idx)];
    }
    Perm t(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      t = t.then(l.gens[static_cast<std::size_t>(*it)]);
    return t;
  }

  /// Strip g through levels starting at `from`; returns the residue and the
  /// level at which stripping stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      std::uint32_t beta = g.img[levels_[l].base];
      if (levels_[l].pos[beta] < 0) return {std::move(g), l};
      g = g.then(transversal(levels_[l], beta).inverse());
      if (g.is_identity()) return {std::move(g), l + 1};
    }
    return {std::move(g), levels_.size()};
  }

  void insert_element(const Perm& g) {
    if (g.is_identity()) return;
    auto [res, lvl] = sift(g, 0);
    if (res.is_identity()) return;
    add_strong_generator(std::move(res), 0, lvl);
  }

  /// Install a residue that fixes base points 0..stop-1 as a strong
  /// generator at levels after `from` (nested strong generator sets).
  /// Returns the deepest level it was added to.
  std::size_t add_strong_generator(Perm res, std::size_t from, std::size_t stop) {
    if (stop >= levels_.size()) {
      std::uint32_t moved = 0;
      while (res.img[moved] == moved) ++moved;
      new_level(moved);
      stop = levels_.size() - 1;
    }
    for (std::size_t j = from; j <= stop; ++j) {
      levels_[j].gens.push_back(res);
      rebuild_orbit(levels_[j]);
    }
    return stop;
  }

  /// Establish the strong generating condition from level l downward: every
  /// Schreier generator of the level must sift to the identity through the
  /// chain below. Failures are installed as strong generators and all
  /// touched levels are re-verified deepest first.
  void complete_level(std::size_t l) {
    rebuild_orbit(levels_[l]);
    for (std::size_t head = 0; head < levels_[l].orbit.size(); ++head) {
      std::uint32_t p = levels_[l].orbit[head];
      Perm up = transversal(levels_[l], p);
      for (std::size_t gi = 0; gi < levels_[l].gens.size(); ++gi) {
        std::uint32_t q = levels_[l].gens[gi].img[p];
        Perm schreier = up.then(levels_[l].gens[gi]).then(transversal(levels_[l], q).inverse());
        if (schreier.is_identity()) continue;
        auto [res, k] = sift(schreier, l + 1);
        if (res.is_identity()) continue;
        std::size_t stop = add_strong_generator(std::move(res), l + 1, k);
        for (std::size_t j = stop + 1; j-- > l + 1;) complete_level(j);
      }
    }
  }

  std::uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

inline PermGroup schreier_sims(std::vector<Perm> gens) { return PermGroup(std::move(gens)); }

inline unsigned long long order(const PermGroup& g) { return g.order(); }

// --- orbit machinery on plain image tables -------------------------------

inline std::vector<std::vector<std::uint32_t>> orbits_of(const std::vector<Perm>& gens,
                                                         std::uint32_t domain) {
  std::vector<bool> seen(domain, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < domain; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> orb = {s};
    seen[s] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const auto& g : gens) {
        std::uint32_t q = g.img[orb[head]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

inline std::vector<std::uint32_t> orbit_of_point(const std::vector<Perm>& gens, std::uint32_t s) {
  std::vector<std::uint32_t> orb = {s};
  std::vector<bool> seen(gens.empty() ? s + 1 : gens[0].degree(), false);
  seen[s] = true;
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const auto& g : gens) {
      std::uint32_t q = g.img[orb[head]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  return orb;
}

/// Number of orbits on ordered pairs of the domain; used as the independent
/// cross-check of rank computations on small domains.
inline std::uint64_t orbit_count_on_ordered_pairs(const std::vector<Perm>& gens,
                                                  std::uint32_t domain) {
  std::vector<bool> seen(static_cast<std::size_t>(domain) * domain, false);
  std::uint64_t count = 0;
  std::vector<std::uint64_t> stack;
  for (std::uint32_t a = 0; a < domain; ++a)
    for (std::uint32_t b = 0; b < domain; ++b) {
      std::uint64_t start = static_cast<std::uint64_t>(a) * domain + b;
      if (seen[start]) continue;
      ++count;
      seen[start] = true;
      stack.assign(1, start);
      while (!stack.empty()) {
        std::uint64_t cur = stack.back();
        stack.pop_back();
        std::uint32_t x = static_cast<std::uint32_t>(cur / domain);
        std::uint32_t y = static_cast<std::uint32_t>(cur % domain);
        for (const auto& g : gens) {
          std::uint64_t nxt = static_cast<std::uint64_t>(g.img[x]) * domain + g.img[y];
          if (!seen[nxt]) {
            seen[nxt] = true;
            stack.push_back(nxt);
          }
        }
      }
    }
  return count;
}

}  // namespace recta
