#pragma once

#include <cstdint>
#include <vector>

#include "recta/bitvec.hpp"
#include "recta/error.hpp"
#include "recta/perm.hpp"
#include "recta/perm_group.hpp"

namespace recta {

/// An action of a generated group on a finite domain, realised as one
/// explicit point-relabeling table per generator.
struct FiniteAction {
  std::uint32_t domain = 0;
  std::vector<Perm> gen_images;
};

/// The permutation a degree-n generator induces on the colex-indexed
/// 2-subsets of [n].
inline Perm pair_perm(const Perm& g) {
  std::uint32_t n = g.degree();
  std::vector<std::uint32_t> img(n * (n - 1) / 2);
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i) {
      std::uint32_t a = g.img[i], b = g.img[j];
      if (a > b) std::swap(a, b);
      img[pair_rank(i, j)] = pair_rank(a, b);
    }
  return Perm(std::move(img));
}

inline FiniteAction pair_action(const std::vector<Perm>& gens) {
  FiniteAction a;
  if (gens.empty()) throw error(errc::bad_input, "pair_action needs generators");
  std::uint32_t n = gens[0].degree();
  a.domain = n * (n - 1) / 2;
  for (const auto& g : gens) a.gen_images.push_back(pair_perm(g));
  return a;
}

inline FiniteAction natural_action(const std::vector<Perm>& gens) {
  FiniteAction a;
  if (gens.empty()) throw error(errc::bad_input, "natural_action needs generators");
  a.domain = gens[0].degree();
  a.gen_images = gens;
  return a;
}

inline std::vector<std::vector<std::uint32_t>> orbits(const FiniteAction& a) {
  return orbits_of(a.gen_images, a.domain);
}

inline bool is_transitive(const FiniteAction& a) {
  return orbit_of_point(a.gen_images, 0).size() == a.domain;
}

/// Number of suborbits of a transitive action: orbits of a point stabiliser
/// on the domain. Cross-checked against the orbit count on ordered pairs
/// whenever the domain is small enough for that to be cheap.
inline std::uint32_t rank_on(const FiniteAction& a) {
  if (!is_transitive(a)) throw error(errc::not_transitive, "rank is defined for transitive actions");
  PermGroup induced(a.gen_images, {0});
  std::vector<Perm> stab = induced.level_generators(1);
  std::uint32_t rank = stab.empty() ? a.domain
                                    : static_cast<std::uint32_t>(orbits_of(stab, a.domain).size());
  if (a.domain <= 2000) {
    std::uint64_t pairs = orbit_count_on_ordered_pairs(a.gen_images, a.domain);
    if (pairs != rank)
      throw error(errc::inconsistent, "stabiliser-orbit rank disagrees with ordered-pair orbits");
  }
  return rank;
}

// --- k-subset and k-tuple transitivity ------------------------------------

inline std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

namespace detail {
// Colex rank of a strictly increasing k-tuple.
inline std::uint64_t subset_rank(const std::vector<std::uint32_t>& s) {
  std::uint64_t r = 0;
  for (std::size_t t = 0; t < s.size(); ++t) r += binomial(s[t], static_cast<std::uint32_t>(t) + 1);
  return r;
}
}  // namespace detail

/// Single orbit on k-subsets, decided by an orbit sweep over the subset
/// domain.
inline bool is_k_homogeneous(const std::vector<Perm>& gens, int k) {
  if (gens.empty()) throw error(errc::bad_input, "no generators");
  std::uint32_t n = gens[0].degree();
  if (k < 1 || static_cast<std::uint32_t>(k) > n) throw error(errc::bad_input, "k out of range");
  std::uint64_t total = binomial(n, static_cast<std::uint32_t>(k));
  std::vector<bool> seen(total, false);
  std::vector<std::vector<std::uint32_t>> stack;
  std::vector<std::uint32_t> first(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) first[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
  seen[detail::subset_rank(first)] = true;
  std::uint64_t found = 1;
  stack.push_back(std::move(first));
  std::vector<std::uint32_t> next(static_cast<std::size_t>(k));
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& g : gens) {
      for (std::size_t t = 0; t < cur.size(); ++t) next[t] = g.img[cur[t]];
      std::sort(next.begin(), next.end());
      std::uint64_t r = detail::subset_rank(next);
      if (!seen[r]) {
        seen[r] = true;
        ++found;
        stack.push_back(next);
      }
    }
  }
  return found == total;
}

/// k-fold transitivity via a stabiliser chain with prescribed base
/// 0,1,...,k-1: the fundamental orbits must have sizes n, n-1, ..., n-k+1.
inline bool is_k_transitive(const std::vector<Perm>& gens, int k) {
  if (gens.empty()) throw error(errc::bad_input, "no generators");
  std::uint32_t n = gens[0].degree();
  if (k < 1 || static_cast<std::uint32_t>(k) > n) throw error(errc::bad_input, "k out of range");
  std::vector<std::uint32_t> hint(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) hint[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
  PermGroup chain(gens, hint);
  auto sizes = chain.fundamental_orbit_sizes();
  for (int i = 0; i < k; ++i)
    if (sizes[static_cast<std::size_t>(i)] != n - static_cast<std::uint32_t>(i)) return false;
  return true;
}

inline bool is_k_homogeneous(const PermGroup& g, int k) { return is_k_homogeneous(g.generators(), k); }
inline bool is_k_transitive(const PermGroup& g, int k) { return is_k_transitive(g.generators(), k); }
inline std::uint32_t rank_on(const PermGroup& g, const FiniteAction& a) {
  (void)g;
  return rank_on(a);
}

}  // namespace recta
