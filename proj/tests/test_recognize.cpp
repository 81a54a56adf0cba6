#include <catch_amalgamated.hpp>

#include <random>

#include "recta/families.hpp"
#include "recta/golay.hpp"
#include "recta/iso.hpp"
#include "recta/recognize.hpp"

using namespace recta;

TEST_CASE("rectagraph recognition") {
  for (int n : {2, 3, 4, 5, 6}) CHECK(is_rectagraph(hypercube(n)).ok);

  auto k4 = is_rectagraph(complete(4));
  CHECK(!k4.ok);
  CHECK(k4.witness.kind == RectagraphWitness::Kind::triangle);

  auto g23 = is_rectagraph(coset_graph(golay23()));
  CHECK(g23.ok);
  CHECK(rectagraph_profile_ok(coset_graph(golay23())));

  // folded 5-cube: rectagraph (d = 5), but diameter 2 forces a2 = 3
  auto f5 = is_rectagraph(coset_graph(repetition_code(5)));
  CHECK(f5.ok);
  CHECK(!rectagraph_profile_ok(coset_graph(repetition_code(5))));

  // folded 7-cube qualifies; the folded 4-cube K_{4,4} has c2 = 4
  CHECK(rectagraph_profile_ok(coset_graph(repetition_code(7))));
  auto f4 = is_rectagraph(coset_graph(repetition_code(4)));
  CHECK(!f4.ok);
  CHECK(f4.witness.kind == RectagraphWitness::Kind::c2_violation);
}

TEST_CASE("maximal cliques of triangular graphs") {
  for (int n : {5, 6, 7, 9}) {
    auto cliques = maximal_cliques(triangular(n), static_cast<std::uint32_t>(n - 1));
    std::size_t stars = 0;
    for (const auto& c : cliques)
      if (c.size() == static_cast<std::size_t>(n - 1)) ++stars;
    CHECK(stars == static_cast<std::size_t>(n));
  }
  // K4: one clique of size 4
  auto all = maximal_cliques(complete(4), 1);
  REQUIRE(all.size() == 1);
  CHECK(all[0].size() == 4);
}

TEST_CASE("triangular graph recognition") {
  for (int n : {2, 3, 4, 5, 6, 7, 8, 12, 24}) {
    auto t = recognize_triangular(triangular(n));
    REQUIRE(t.has_value());
    CHECK(t->n == n);
  }
  CHECK(!recognize_triangular(complement(triangular(5))).has_value());  // Petersen
  CHECK(!recognize_triangular(hypercube(4)).has_value());
  CHECK(!recognize_triangular(complete(5)).has_value());
  // 6 vertices that are not K_{3[2]}
  CHECK(!recognize_triangular(complete(6)).has_value());
  CHECK(!recognize_triangular(hypercube(2)).has_value());

  // K_{3[2]} with scrambled vertex order is still T_4
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::uint32_t> relab(6);
    std::iota(relab.begin(), relab.end(), 0u);
    std::shuffle(relab.begin(), relab.end(), rng);
    Graph k32 = complete_multipartite(3, 2);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < 6; ++u)
      for (std::uint32_t v = u + 1; v < 6; ++v)
        if (k32.adjacent(u, v))
          edges.emplace_back(std::min(relab[u], relab[v]), std::max(relab[u], relab[v]));
    auto rec = recognize_triangular(Graph::make_explicit(6, std::move(edges)));
    REQUIRE(rec.has_value());
    CHECK(rec->n == 4);
  }
}

TEST_CASE("locally triangular graphs") {
  CHECK(is_locally_triangular(complete(4)) == 3);
  CHECK(!is_locally_triangular(hypercube(4)).has_value());

  auto halves = halved_graphs(hypercube(5));
  CHECK(is_locally_triangular(halves[0]) == 5);

  auto h6 = halved_graphs(hypercube(6));
  CHECK(is_locally_triangular(h6[0]) == 6);

  // neighbourhood of the halved Golay coset graph is T_24
  Graph g24 = coset_graph(golay24());
  auto gh = halved_graphs(g24);
  REQUIRE(gh.size() == 2);
  CHECK(gh[0].num_vertices() == 2048);
  Graph nb = induced_neighborhood(gh[0], 0);
  CHECK(nb.num_vertices() == 276);
  std::uint32_t val = 0;
  CHECK(nb.is_regular(&val));
  CHECK(val == 44);
  auto rec = recognize_triangular(nb);
  REQUIRE(rec.has_value());
  CHECK(rec->n == 24);
}

TEST_CASE("isomorphism on small graphs") {
  // T_5 is the complement of the Petersen graph
  auto m = isomorphic(triangular(5), complement(complement(triangular(5))));
  CHECK(m.has_value());

  Graph pet = complement(triangular(5));
  auto m2 = isomorphic(triangular(5), pet);
  CHECK(!m2.has_value());  // 6-regular vs 3-regular

  // self-isomorphism always exists
  for (const Graph& g : {hypercube(4), triangular(6), sp6_minus_hyperplane()}) {
    auto self = isomorphic(g, g);
    REQUIRE(self.has_value());
  }

  CHECK(!isomorphic(hypercube(3), complete_multipartite(4, 2)).has_value());

  // C6 vs 2x C3: same degree sequence, different structure
  Graph c6 = Graph::make_explicit(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  Graph cc = Graph::make_explicit(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!isomorphic(c6, cc).has_value());
}

TEST_CASE("relabeled random graphs are isomorphic") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t n = 6 + static_cast<std::uint32_t>(rng() % 10);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    Graph g = Graph::make_explicit(n, edges);
    std::vector<std::uint32_t> relab(n);
    std::iota(relab.begin(), relab.end(), 0u);
    std::shuffle(relab.begin(), relab.end(), rng);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> redges;
    for (auto [u, v] : edges)
      redges.emplace_back(std::min(relab[u], relab[v]), std::max(relab[u], relab[v]));
    Graph h = Graph::make_explicit(n, redges);
    auto m = isomorphic(g, h);
    REQUIRE(m.has_value());
    for (auto [u, v] : edges) REQUIRE(h.adjacent((*m)[u], (*m)[v]));
  }
}

TEST_CASE("sp6 minus hyperplane is a distance-4 component of the 6-cube") {
  Graph d4 = distance_k_graph(hypercube(6), 4);
  auto comps = connected_components(d4);
  REQUIRE(comps.size() == 2);
  Graph comp = induced_subgraph(d4, comps[0]);
  auto m = isomorphic(sp6_minus_hyperplane(), comp);
  CHECK(m.has_value());
}

TEST_CASE("brute force automorphisms") {
  PermGroup a1 = brute_force_automorphisms(complete(4));
  CHECK(a1.order() == 24);
  PermGroup a2 = brute_force_automorphisms(complete_multipartite(4, 2));
  CHECK(a2.order() == 384);  // S2 wr S4
  PermGroup a3 = brute_force_automorphisms(complement(triangular(5)));
  CHECK(a3.order() == 120);  // Petersen
  Graph c4 = hypercube(2);
  CHECK(brute_force_automorphisms(c4).order() == 8);
  CHECK_THROWS_AS(brute_force_automorphisms(triangular(6)), error);
}

TEST_CASE("halved graphs of even coset graphs are isomorphic to each other") {
  for (const LinearCode& c : {zero_code(4), zero_code(6), repetition_code(8), zero_code(5)}) {
    if (!c.is_even() && c.dimension() > 0) continue;
    Graph parent = coset_graph(c);
    if (!bipartition(parent)) continue;
    auto halves = halved_graphs(parent);
    REQUIRE(halves.size() == 2);
    auto m = isomorphic(halves[0], halves[1]);
    CHECK(m.has_value());
  }
}
