#include <doctest.h>

#include <random>

#include "cycgr/cyclic_spec.hpp"
#include "cycgr/perm_group.hpp"

using namespace cycgr;

namespace {

void check_group_axioms(const PermGroup& g) {
  const PermGroup full = g.materialized();
  const auto& el = full.elements();
  CHECK(GroupOrder(el.size()) == g.order());
  CHECK(std::binary_search(el.begin(), el.end(), Permutation::identity(g.degree())));
  for (const auto& a : el) {
    CHECK(std::binary_search(el.begin(), el.end(), a.inverse()));
    for (const auto& b : el) {
      if (!std::binary_search(el.begin(), el.end(), a * b)) {
        FAIL("not closed under composition");
      }
    }
  }
}

}  // namespace

TEST_CASE("permutation basics") {
  auto a = Permutation::from_cycles(4, {{0, 1, 2}});
  auto b = Permutation::from_cycles(4, {{2, 3}});
  CHECK((a * b)(3) == 0);  // b first: 3 -> 2, then a: 2 -> 0
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.to_cycle_string() == "(0 1 2)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(parse_cycles("(0 1 2)(3)", 4) == a);
  CHECK(parse_cycles(" ( 2 0 1 ) ", 4) == Permutation::from_cycles(4, {{0, 1, 2}}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), std::invalid_argument);
}

TEST_CASE("cycles are canonical") {
  auto p = Permutation({3, 2, 1, 0, 4});
  auto cyc = p.cycles();
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0] == std::vector<Vertex>{0, 3});
  CHECK(cyc[1] == std::vector<Vertex>{1, 2});
  CHECK(parse_cycles(p.to_cycle_string(), 5) == p);
}

TEST_CASE("cyclic_group") {
  SUBCASE("two orbits of size 3") {
    CyclicSpec spec(3, {1, 1}, 0);
    auto g = cyclic_group(spec);
    CHECK(g.degree() == 6);
    CHECK(g.order() == 3);
    CHECK(cyclic_generator(spec).to_cycle_string() == "(0 1 2)(3 4 5)");
    check_group_axioms(g);
  }
  SUBCASE("order two on two points") {
    auto g = cyclic_group(CyclicSpec(2, {1}, 0));
    CHECK(g.order() == 2);
    CHECK(group_equals(g, symmetric_group(2)));
  }
  SUBCASE("orbits 25 and 5") {
    auto g = cyclic_group(CyclicSpec(5, {2, 1}, 0));
    CHECK(g.degree() == 30);
    CHECK(g.order() == 25);
    for (const auto& e : g.elements()) {
      for (const auto& c : e.cycles()) {
        const bool in_big = c[0] < 25;
        for (auto v : c) CHECK((v < 25) == in_big);
        CHECK((in_big ? 25 : 5) % c.size() == 0);
      }
    }
  }
  SUBCASE("fixed points only") {
    auto g = cyclic_group(CyclicSpec(3, {}, 4));
    CHECK(g.order() == 1);
    CHECK(g.degree() == 4);
  }
  SUBCASE("orbits match the layout") {
    CyclicSpec spec(2, {3, 1, 2}, 2);
    OrbitLayout layout(spec);
    auto orbits = cyclic_group(spec).orbits();
    REQUIRE(orbits.size() == layout.orbit_count());
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      CHECK(orbits[j].front() == layout.orbits()[j].base);
      CHECK(orbits[j].size() == layout.orbits()[j].size);
    }
  }
}

TEST_CASE("CyclicSpec validation") {
  CHECK_THROWS_AS(CyclicSpec(4, {1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(CyclicSpec(3, {0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(CyclicSpec(3, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(CyclicSpec::from_orbit_sizes(3, {6}, 0), std::invalid_argument);
  auto spec = CyclicSpec::from_orbit_sizes(3, {3, 9}, 1);
  CHECK(spec.exponents() == std::vector<std::uint32_t>{2, 1});
  CHECK(spec.degree() == 13);
  CHECK(spec.order() == 9);
  CHECK(spec.to_string() == "p=3 orbits=9,3 fixed=1");
  CHECK(CyclicSpec(2, {3}, 0).small_orbit_size() == 4);
  CHECK(CyclicSpec(5, {1}, 0).small_orbit_size() == 5);
}

TEST_CASE("OrbitLayout indexing") {
  OrbitLayout layout(CyclicSpec(3, {2, 1}, 1));
  CHECK(layout.degree() == 13);
  CHECK(layout.vertex(1, 0) == 9);
  CHECK(layout.vertex(1, -1) == 11);
  CHECK(layout.vertex(0, 10) == 1);
  CHECK(layout.orbit_of(12) == 2);
  CHECK(layout.index_in_orbit(10) == 1);
  CHECK(layout.label(10) == "v^2_1");
}

TEST_CASE("dihedral_group") {
  CHECK(group_equals(dihedral_group(3), symmetric_group(3).materialized()));
  CHECK(dihedral_group(5).order() == 10);
  auto d4 = dihedral_group(4);
  CHECK(contains(d4, Permutation::from_cycles(4, {{0, 1, 2, 3}})));
  CHECK(contains(d4, Permutation::from_cycles(4, {{1, 3}})));
  CHECK_FALSE(contains(d4, Permutation::from_cycles(4, {{0, 1}})));
  CHECK_THROWS_AS(dihedral_group(2), std::invalid_argument);
  check_group_axioms(d4);
}

TEST_CASE("direct_sum and parallel_product") {
  auto i1 = PermGroup::trivial(1);
  auto i2 = direct_sum(i1, i1);
  CHECK(i2.degree() == 2);
  CHECK(i2.order() == 1);

  auto c3 = cyclic_group(CyclicSpec(3, {1}, 0));
  auto sum = direct_sum(c3, c3);
  CHECK(sum.order() == 9);
  CHECK(sum.materialized().elements().size() == 9);
  check_group_axioms(sum);

  auto s2i1 = direct_sum(symmetric_group(2), i1);
  CHECK(s2i1.degree() == 3);
  CHECK(s2i1.order() == 2);

  auto c3_2 = parallel_product(c3, 2);
  CHECK(c3_2.degree() == 6);
  CHECK(c3_2.order() == 3);
  CHECK(group_equals(c3_2, cyclic_group(CyclicSpec(3, {1, 1}, 0))));
  CHECK(group_equals(parallel_product(c3, 1), c3));
  auto c5_2 = parallel_product(cyclic_group(CyclicSpec(5, {1}, 0)), 2);
  CHECK(c5_2.degree() == 10);
  CHECK(c5_2.materialized().elements().size() == 5);
}

TEST_CASE("group_equals and contains") {
  auto c3_2 = cyclic_group(CyclicSpec(3, {1, 1}, 0));
  CHECK(group_equals(c3_2, c3_2));
  CHECK_FALSE(group_equals(cyclic_group(CyclicSpec(3, {1}, 0)), dihedral_group(3)));
  // (v1 v2)(w1 w2) lies in D_3 + D_3 but not in the parallel cyclic group.
  CHECK_FALSE(contains(c3_2, Permutation::from_cycles(6, {{1, 2}, {4, 5}})));
  CHECK_THROWS_AS(contains(c3_2, Permutation::identity(5)), std::invalid_argument);
  CHECK_THROWS_AS(group_equals(c3_2, dihedral_group(5)), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_group(12).materialized(), GroupTooLarge);
}

TEST_CASE("from_elements rejects non-groups") {
  std::vector<Permutation> not_closed{Permutation::identity(3),
                                      Permutation::from_cycles(3, {{0, 1, 2}})};
  CHECK_THROWS_AS(PermGroup::from_elements(3, not_closed), std::invalid_argument);
  auto s4 = symmetric_group(4).materialized();
  auto rebuilt = PermGroup::from_elements(4, s4.elements());
  CHECK(rebuilt.order() == 24);
  CHECK(rebuilt.generators().size() <= 4);
}

TEST_CASE("random generated groups satisfy the axioms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<Permutation> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<Vertex> img(n);
      std::iota(img.begin(), img.end(), Vertex{0});
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    auto g = PermGroup::generated_by(n, gens);
    GroupOrder fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(fact % g.order() == 0);
    check_group_axioms(g);
  }
}
