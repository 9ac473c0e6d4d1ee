#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "catalog.hpp"
#include "normalp/error.hpp"
#include "normalp/perm_group.hpp"
#include "oracles.hpp"

using namespace normalp;

TEST_SUITE("permutation") {
  TEST_CASE("composition runs left to right") {
    const auto a = Permutation::from_cycles(3, {{0, 1}});
    const auto b = Permutation::from_cycles(3, {{1, 2}});
    const auto ab = a * b;
    for (Point x = 0; x < 3; ++x) CHECK(ab(x) == b(a(x)));
    CHECK(ab == Permutation::from_cycles(3, {{0, 2, 1}}));
  }

  TEST_CASE("inverse, powers, order") {
    const auto c = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
    CHECK(c.order() == 6);
    CHECK((c * c.inverse()).is_identity());
    CHECK(c.pow(6).is_identity());
    CHECK(c.pow(-1) == c.inverse());
    CHECK(c.pow(4) == c * c * c * c);
    CHECK(c.first_moved() == 0);
    CHECK(Permutation(4).first_moved() == 4);
    CHECK(c.cycle_string() == "(0 1 2)(3 4)");
  }

  TEST_CASE("malformed permutations are rejected") {
    CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InvalidArgument);
    CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), InvalidArgument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(Permutation(3) * Permutation(4), InvalidArgument);
  }

  TEST_CASE("conjugate and commutator") {
    const auto h = Permutation::from_cycles(4, {{0, 1}});
    const auto g = Permutation::from_cycles(4, {{1, 2, 3}});
    const auto c = conjugate(h, g);
    CHECK(c == g.inverse() * h * g);
    CHECK(commutator(h, g) == h.inverse() * g.inverse() * h * g);
  }

  TEST_CASE("group_from_generators examples") {
    CHECK(PermGroup(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})}).order() == 6);
    CHECK(PermGroup(1, {}).order() == 1);
    CHECK(PermGroup(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{2, 3, 4}})}).order() == 60);
    CHECK_THROWS_AS(PermGroup(4, {Permutation(3)}), InvalidArgument);
  }

  TEST_CASE("order cap is enforced") {
    CHECK_THROWS_AS(testing::symmetric(10), CapExceeded);
    CHECK_THROWS_AS(PermGroup(5, testing::symmetric(5).generators(), GroupLimits{100, 100}), CapExceeded);
  }

  TEST_CASE("orders and membership agree with closure on the catalog") {
    for (const auto& entry : testing::catalog()) {
      CAPTURE(entry.name);
      const auto& g = entry.group;
      const auto closure = testing::closure_elements(g.degree(), g.generators());
      CHECK(g.order() == closure.size());
      CHECK(g.elements() == closure);
      for (const auto& x : closure) CHECK(g.contains(x));
    }
  }

  TEST_CASE("membership agrees with closure on all of S5") {
    const auto all = testing::symmetric(5).elements();
    CHECK(all.size() == 120);
    for (const auto& entry : testing::catalog()) {
      if (entry.group.degree() != 5) continue;
      const auto closure = testing::closure_elements(5, entry.group.generators());
      for (const auto& x : all) CHECK(entry.group.contains(x) == std::binary_search(closure.begin(), closure.end(), x));
    }
  }

  TEST_CASE("groups above the table cap use the chain") {
    const auto s9 = testing::symmetric(9);
    CHECK(s9.order() == 362880);
    CHECK_THROWS_AS(s9.elements(), CapExceeded);
    CHECK(s9.contains(Permutation::from_cycles(9, {{0, 8}, {2, 5, 7}})));
    const auto a9 = testing::alternating(9);
    CHECK(a9.order() == 181440);
    CHECK_FALSE(a9.contains(Permutation::from_cycles(9, {{0, 8}})));
    std::uint64_t visited = 0;
    a9.for_each_element([&](const Permutation&) { ++visited; });
    CHECK(visited == 181440);
  }

  TEST_CASE("orbits, transitivity, stabilizers") {
    const auto s4 = testing::symmetric(4);
    CHECK(s4.is_transitive());
    CHECK(s4.orbit(2).size() == 4);
    const auto stab = s4.point_stabilizer(3);
    CHECK(stab.order() == 6);
    for (const auto& x : stab.elements()) CHECK(x(3) == 3);
    const auto v = testing::direct_product(testing::cyclic(2), testing::cyclic(2));
    CHECK_FALSE(v.is_transitive());
    CHECK(v.orbit(0).size() == 2);
  }

  TEST_CASE("from_elements and equality") {
    const auto s3 = testing::symmetric(3);
    const auto rebuilt = PermGroup::from_elements(3, s3.elements());
    CHECK(rebuilt == s3);
    CHECK(rebuilt.generators().size() <= 2);
    CHECK_FALSE(PermGroup::trivial(3) == s3);
    CHECK(PermGroup::trivial(3).with_generators(s3.generators()) == s3);
  }
}
