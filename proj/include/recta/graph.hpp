#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "recta/error.hpp"
#include "recta/linear_code.hpp"

namespace recta {

/// What the per-vertex label array means, when present.
enum class LabelKind { none, bitvec, pair2, parent };

/// A finite simple undirected graph. Three representations share the type:
///   explicit_adj — CSR adjacency lists, sorted per row;
///   cube         — Q_n with vertices 0..2^n-1, neighbours by bit flips;
///   coset        — coset graph of a linear code with min distance >= 3,
///                  vertices are syndrome indices, neighbours by XOR with
///                  the syndromes of the weight-1 vectors.
/// The implicit forms exist so 2^24-vertex cubes and 2^23-vertex folded
/// cubes are never materialised.
class Graph {
 public:
  enum class Rep { explicit_adj, cube, coset };

  static Graph make_explicit(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    Graph g;
    g.rep_ = Rep::explicit_adj;
    g.n_ = n;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::uint32_t> deg(n, 0);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw error(errc::bad_input, "edge endpoint out of range");
      if (u == v) throw error(errc::loops, "loops are not allowed in a simple graph");
      ++deg[u], ++deg[v];
    }
    g.off_.assign(n + 1, 0);
    for (std::uint32_t v = 0; v < n; ++v) g.off_[v + 1] = g.off_[v] + deg[v];
    g.adj_.resize(g.off_[n]);
    std::vector<std::uint32_t> fill(g.off_.begin(), g.off_.end() - 1);
    for (auto [u, v] : edges) {
      g.adj_[fill[u]++] = v;
      g.adj_[fill[v]++] = u;
    }
    for (std::uint32_t v = 0; v < n; ++v) std::sort(g.adj_.begin() + g.off_[v], g.adj_.begin() + g.off_[v + 1]);
    return g;
  }

  static Graph make_cube(int dim) {
    if (dim < 1 || dim > 24) throw error(errc::bad_input, "cube dimension must be in [1,24]");
    Graph g;
    g.rep_ = Rep::cube;
    g.dim_ = dim;
    g.n_ = 1u << dim;
    return g;
  }

  static Graph make_coset(const LinearCode& c) {
    int nr = c.length() - c.dimension();
    for (int i = 1; i <= c.length(); ++i)
      if (c.contains(unit_vec(c.length(), i)))
        throw error(errc::loops, "coset graph has loops: some e_i lies in the code");
    if (nr > 24) throw error(errc::quotient_too_large, "more than 2^24 cosets");
    Graph g;
    g.rep_ = Rep::coset;
    g.dim_ = c.length();
    g.code_ = c;
    g.n_ = 1u << nr;
    g.esy_.resize(static_cast<std::size_t>(c.length()));
    for (int i = 1; i <= c.length(); ++i)
      g.esy_[static_cast<std::size_t>(i - 1)] = c.syndrome(unit_vec(c.length(), i).bits);
    g.esy_sorted_ = g.esy_;
    std::sort(g.esy_sorted_.begin(), g.esy_sorted_.end());
    if (std::adjacent_find(g.esy_sorted_.begin(), g.esy_sorted_.end()) != g.esy_sorted_.end())
      throw error(errc::bad_input, "implicit coset graph needs min distance >= 3");
    return g;
  }

  Rep rep() const { return rep_; }
  std::uint32_t num_vertices() const { return n_; }
  int cube_dim() const { return dim_; }
  const LinearCode& coset_code() const { return code_; }
  /// Coset representation only: syndrome of e_i, in coordinate order.
  const std::vector<std::uint32_t>& coordinate_syndromes() const { return esy_; }

  std::uint32_t degree(std::uint32_t v) const {
    switch (rep_) {
      case Rep::explicit_adj: return off_[v + 1] - off_[v];
      default: return static_cast<std::uint32_t>(dim_);
    }
  }

  /// Sorted neighbour row for explicit graphs.
  const std::uint32_t* row(std::uint32_t v) const { return adj_.data() + off_[v]; }

  void neighbors(std::uint32_t v, std::vector<std::uint32_t>& out) const {
    out.clear();
    switch (rep_) {
      case Rep::explicit_adj:
        out.assign(adj_.begin() + off_[v], adj_.begin() + off_[v + 1]);
        break;
      case Rep::cube:
        for (int i = 0; i < dim_; ++i) out.push_back(v ^ (1u << i));
        break;
      case Rep::coset:
        for (auto s : esy_) out.push_back(v ^ s);
        break;
    }
  }

  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    switch (rep_) {
      case Rep::explicit_adj: {
        const std::uint32_t* b = adj_.data() + off_[u];
        const std::uint32_t* e = adj_.data() + off_[u + 1];
        return std::binary_search(b, e, v);
      }
      case Rep::cube:
        return std::popcount(u ^ v) == 1;
      case Rep::coset:
        return std::binary_search(esy_sorted_.begin(), esy_sorted_.end(), u ^ v);
    }
    return false;
  }

  std::uint64_t num_edges() const {
    switch (rep_) {
      case Rep::explicit_adj: return adj_.size() / 2;
      default: return static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(dim_) / 2;
    }
  }

  bool is_regular(std::uint32_t* valency = nullptr) const {
    if (rep_ != Rep::explicit_adj) {
      if (valency) *valency = static_cast<std::uint32_t>(dim_);
      return true;
    }
    if (n_ == 0) return true;
    std::uint32_t d = degree(0);
    for (std::uint32_t v = 1; v < n_; ++v)
      if (degree(v) != d) return false;
    if (valency) *valency = d;
    return true;
  }

  // optional per-vertex annotation
  LabelKind label_kind() const { return lk_; }
  const std::vector<std::uint64_t>& labels() const { return label_; }
  void set_labels(LabelKind k, std::vector<std::uint64_t> l) {
    lk_ = k;
    label_ = std::move(l);
  }

 private:
  Rep rep_ = Rep::explicit_adj;
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> off_, adj_;
  int dim_ = 0;
  LinearCode code_;
  std::vector<std::uint32_t> esy_, esy_sorted_;
  LabelKind lk_ = LabelKind::none;
  std::vector<std::uint64_t> label_;
};

// --- edge-list format: "N M" then M lines "u v" with u < v ----------------

inline std::string write_edge_list(const Graph& g) {
  if (g.rep() != Graph::Rep::explicit_adj)
    throw error(errc::too_large, "edge-list export requires an explicit graph");
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u) {
    const std::uint32_t* b = g.row(u);
    for (std::uint32_t k = 0; k < g.degree(u); ++k)
      if (b[k] > u) os << u << ' ' << b[k] << '\n';
  }
  return os.str();
}

inline Graph parse_edge_list(std::istream& in) {
  std::uint64_t n = 0, m = 0;
  if (!(in >> n >> m)) throw error(errc::bad_input, "edge-list header must be 'N M'");
  if (n > (1u << 20)) throw error(errc::too_large, "explicit graphs are capped at 2^20 vertices");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    std::uint32_t u = 0, v = 0;
    if (!(in >> u >> v)) throw error(errc::bad_input, "missing edge line");
    if (!(u < v && v < n)) throw error(errc::bad_input, "edges must satisfy 0 <= u < v < N");
    edges.emplace_back(u, v);
  }
  return Graph::make_explicit(static_cast<std::uint32_t>(n), std::move(edges));
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_input, "cannot open graph file " + path);
  return parse_edge_list(in);
}

}  // namespace recta
