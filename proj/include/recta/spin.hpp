#pragma once

#include <vector>

#include "recta/linear_code.hpp"
#include "recta/perm.hpp"

namespace recta {

/// Smallest subspace of GF(2)^n containing the seeds and closed under the
/// coordinate action of every generator: alternate linear closure with
/// generator images until nothing new appears. The result is re-verified
/// to be generator- and addition-closed before returning.
inline LinearCode spin_submodule(const std::vector<Perm>& h_gens, int n,
                                 const std::vector<BitVec>& seeds) {
  for (const auto& g : h_gens)
    if (g.degree() != static_cast<std::uint32_t>(n))
      throw error(errc::degree_mismatch, "spin generators must have degree n");
  LinearCode span = LinearCode::from_rows(n, seeds);
  std::vector<std::uint64_t> work(span.rows());
  while (!work.empty()) {
    std::uint64_t v = work.back();
    work.pop_back();
    for (const auto& g : h_gens) {
      std::uint64_t w = permute_word(v, g);
      if (!span.contains(w)) {
        std::vector<BitVec> rows;
        for (auto r : span.rows()) rows.emplace_back(r, n);
        rows.emplace_back(w, n);
        span = LinearCode::from_rows(n, rows);
        work.push_back(w);
        // images of the refreshed basis may be new as well
        for (auto r : span.rows()) work.push_back(r);
      }
    }
  }
  for (auto r : span.rows())
    for (const auto& g : h_gens)
      if (!span.contains(permute_word(r, g)))
        throw error(errc::inconsistent, "spin closure failed re-verification");
  return span;
}

}  // namespace recta
