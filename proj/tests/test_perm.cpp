#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "recta/action.hpp"
#include "recta/perm.hpp"
#include "recta/perm_group.hpp"
#include "recta/registry.hpp"

using namespace recta;

TEST_CASE("perm basics") {
  Perm p = perm_from_cycles(5, {{1, 2, 3}});
  CHECK(p.img == std::vector<std::uint32_t>{1, 2, 0, 3, 4});
  CHECK(p.then(p.inverse()).is_identity());
  CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 0, 1}), error);

  std::istringstream in("3 2\n2 3 1\n2 1 3\n");
  auto gens = parse_generators(in);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].img == std::vector<std::uint32_t>{1, 2, 0});
  CHECK(write_generators(gens) == "3 2\n2 3 1\n2 1 3\n");
}

TEST_CASE("schreier sims on standard groups") {
  PermGroup s5(s_n_gens(5));
  CHECK(s5.order() == 120);
  PermGroup a4(a_n_gens(4));
  CHECK(a4.order() == 12);
  CHECK(!a4.contains(perm_from_cycles(4, {{1, 2}})));
  CHECK(a4.contains(perm_from_cycles(4, {{1, 2, 3}})));
  PermGroup s8(s_n_gens(8));
  CHECK(s8.order() == 40320);
  PermGroup a9(a_n_gens(9));
  CHECK(a9.order() == 181440);
}

TEST_CASE("bsgs order equals exhaustive element count on small groups") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint32_t deg = 4 + static_cast<std::uint32_t>(rng() % 4);
    std::vector<std::uint32_t> base(deg);
    std::iota(base.begin(), base.end(), 0u);
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      auto img = base;
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    // exhaustive closure
    std::set<std::vector<std::uint32_t>> all = {Perm(deg).img};
    std::vector<Perm> work = {Perm(deg)};
    while (!work.empty()) {
      Perm cur = work.back();
      work.pop_back();
      for (const auto& g : gens) {
        Perm nxt = cur.then(g);
        if (all.insert(nxt.img).second) work.push_back(nxt);
      }
    }
    PermGroup grp(gens);
    REQUIRE(grp.order() == all.size());
    for (int t = 0; t < 10; ++t) {
      auto img = base;
      std::shuffle(img.begin(), img.end(), rng);
      Perm cand{img};
      CHECK(grp.contains(cand) == (all.count(cand.img) > 0));
    }
  }
}

TEST_CASE("orbit sizes divide the order and sum to the domain") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t deg = 5 + static_cast<std::uint32_t>(rng() % 5);
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<std::uint32_t> img(deg);
      std::iota(img.begin(), img.end(), 0u);
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    PermGroup grp(gens);
    auto orbs = orbits_of(gens, deg);
    std::uint64_t total = 0;
    for (const auto& o : orbs) {
      total += o.size();
      CHECK(grp.order() % o.size() == 0);
    }
    CHECK(total == deg);
    // orbit-stabilizer: |G| = |orbit| * |stab|
    PermGroup stab = grp.stabilizer(0);
    CHECK(grp.order() == orbit_of_point(gens, 0).size() * stab.order());
  }
}

TEST_CASE("registry groups verify and have the advertised actions") {
  PermGroup m24(m24_gens());
  CHECK(m24.order() == 244823040ull);
  PermGroup m23(m23_gens());
  CHECK(m23.order() == 10200960ull);
  PermGroup m12(m12_gens());
  CHECK(m12.order() == 95040ull);
  PermGroup m11(m11_gens());
  CHECK(m11.order() == 7920ull);
  PermGroup pgl(pgl_gamma_2_8_gens());
  CHECK(pgl.order() == 1512ull);

  CHECK(is_k_transitive(m24_gens(), 5));
  CHECK(!is_k_transitive(m23_gens(), 5));
  CHECK(is_k_transitive(m23_gens(), 4));
  CHECK(is_k_homogeneous(m23_gens(), 4));
  CHECK(is_k_transitive(m12_gens(), 5));
  CHECK(is_k_transitive(m11_gens(), 4));

  for (const auto& g : m23_gens()) CHECK(g.degree() == 23);
}

TEST_CASE("pair action and ranks") {
  CHECK(pair_perm(Perm(7)).is_identity());

  auto check_rank = [](const std::vector<Perm>& gens, std::uint32_t expect) {
    CHECK(rank_on(pair_action(gens)) == expect);
  };
  check_rank(s_n_gens(5), 3);
  check_rank(s_n_gens(9), 3);
  check_rank(a_n_gens(7), 3);
  check_rank(pgl_gamma_2_8_gens(), 3);
  check_rank(m11_gens(), 3);
  check_rank(m12_gens(), 3);
  check_rank(m23_gens(), 3);
  check_rank(m24_gens(), 3);

  CHECK(rank_on(natural_action(s_n_gens(5))) == 2);
  CHECK(rank_on(natural_action(m24_gens())) == 2);

  // PSL(2,8) alone (dropping the Frobenius generator) is not rank 3 on pairs
  std::vector<Perm> psl(pgl_gamma_2_8_gens().begin(), pgl_gamma_2_8_gens().end() - 1);
  CHECK(PermGroup(psl).order() == 504);
  CHECK(rank_on(pair_action(psl)) == 5);

  CHECK_THROWS_AS(rank_on(natural_action({perm_from_cycles(5, {{1, 2}})})), error);
}

TEST_CASE("k-homogeneity on subsets") {
  CHECK(is_k_homogeneous(s_n_gens(7), 4));
  CHECK(is_k_homogeneous(a_n_gens(7), 4));
  CHECK(is_k_homogeneous(m24_gens(), 5));
  CHECK(!is_k_homogeneous({perm_from_cycles(6, {{1, 2, 3, 4, 5, 6}})}, 2));
}

TEST_CASE("finite action respects composition on generators") {
  auto gens = m12_gens();
  FiniteAction act = pair_action(gens);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Perm lhs = act.gen_images[i].then(act.gen_images[j]);
      Perm rhs = pair_perm(gens[i].then(gens[j]));
      CHECK(lhs == rhs);
    }
}
