#include <doctest.h>

#include <algorithm>
#include <set>

#include "catalog.hpp"
#include "normalp/arith.hpp"
#include "normalp/error.hpp"
#include "normalp/groupkit.hpp"
#include "oracles.hpp"

using namespace normalp;
using testing::catalog;

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& part : factorize(n).parts) out.push_back(part.prime);
  return out;
}

std::vector<Permutation> intersect(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
  std::vector<Permutation> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Intersection of the index-p subgroups, from the full subgroup lattice.
std::vector<Permutation> brute_frattini(const std::vector<Permutation>& elements, std::uint64_t p) {
  std::vector<Permutation> result = elements;
  for (const auto& h : testing::all_subgroups(elements)) {
    if (h.size() * p == elements.size()) result = intersect(result, h);
  }
  return result;
}

PermGroup s3() { return testing::symmetric(3); }

}  // namespace

TEST_SUITE("groupkit") {
  TEST_CASE("sylow_subgroup examples") {
    CHECK(sylow_subgroup(testing::symmetric(4), 2).order() == 8);
    CHECK(sylow_subgroup(testing::alternating(5), 5).order() == 5);
    const auto d4 = testing::dihedral(4);
    CHECK(sylow_subgroup(d4, 2) == d4);
    CHECK(sylow_subgroup(d4, 3).is_trivial());
    CHECK_THROWS_AS(sylow_subgroup(d4, 4), InvalidArgument);
  }

  TEST_CASE("p_core examples") {
    const auto core = p_core(testing::symmetric(4), 2);
    CHECK(core.order() == 4);
    for (const auto& x : core.elements()) CHECK((x.is_identity() || x.order() == 2));
    CHECK(p_core(s3(), 2).is_trivial());
    CHECK(p_core(s3(), 3).order() == 3);
  }

  TEST_CASE("normalizer and centralizer examples") {
    const auto g = s3();
    const auto p2 = sylow_subgroup(g, 2);
    CHECK(normalizer(g, p2) == p2);
    CHECK(centralizer(g, PermGroup::trivial(3)) == g);
    const auto a3 = p_core(g, 3);
    CHECK(centralizer(g, a3) == a3);
    CHECK(normalizer(g, a3) == g);
  }

  TEST_CASE("fitting examples") {
    CHECK(fitting(testing::symmetric(4)).order() == 4);
    CHECK(fitting(s3()).order() == 3);
    for (const auto& name : {"C6", "C4xC2", "C2xC2xC2"}) {
      for (const auto& entry : catalog()) {
        if (entry.name == name) CHECK(fitting(entry.group) == entry.group);
      }
    }
    CHECK(fitting(testing::alternating(5)).is_trivial());
  }

  TEST_CASE("frattini examples") {
    CHECK(frattini_p(testing::cyclic(4)).order() == 2);
    CHECK(frattini_p(testing::cyclic(5)).is_trivial());
    CHECK(frattini_p(testing::direct_product(testing::cyclic(2), testing::cyclic(2))).is_trivial());
    CHECK_THROWS_AS(frattini_p(s3()), PreconditionFailed);
  }

  TEST_CASE("frattini agrees with the maximal-subgroup intersection") {
    std::vector<PermGroup> groups = {testing::cyclic(8), testing::dihedral(4), testing::quaternion(), testing::dihedral(8),
                                     testing::direct_product(testing::cyclic(4), testing::cyclic(2)),
                                     testing::direct_product(testing::cyclic(4), testing::cyclic(4)),
                                     testing::direct_product(testing::dihedral(4), testing::cyclic(2)),
                                     testing::cyclic(9), testing::direct_product(testing::cyclic(3), testing::cyclic(9)),
                                     sylow_subgroup(testing::symmetric(6), 2), sylow_subgroup(testing::symmetric(6), 3)};
    for (const auto& g : groups) {
      const std::uint64_t p = prime_divisors(g.order()).front();
      CAPTURE(g.order());
      CHECK(frattini_p(g).elements() == brute_frattini(g.elements(), p));
    }
  }

  TEST_CASE("p_group_subgroups agrees with the lattice oracle") {
    std::vector<PermGroup> groups = {testing::cyclic(8), testing::dihedral(4), testing::quaternion(),
                                     testing::direct_product(testing::direct_product(testing::cyclic(2), testing::cyclic(2)), testing::cyclic(2)),
                                     testing::dihedral(8), sylow_subgroup(testing::symmetric(6), 3)};
    for (const auto& g : groups) {
      const std::uint64_t p = prime_divisors(g.order()).front();
      const auto expected = testing::all_subgroups(g.elements());
      auto got = p_group_subgroups(g, p, 1000);
      std::set<std::vector<Permutation>> got_set(got.begin(), got.end());
      CHECK(got.size() == expected.size());
      CHECK(std::set<std::vector<Permutation>>(expected.begin(), expected.end()) == got_set);
    }
    CHECK_THROWS_AS(p_group_subgroups(testing::direct_product(testing::direct_product(testing::cyclic(2), testing::cyclic(2)), testing::cyclic(2)), 2, 5),
                    CapExceeded);
  }

  TEST_CASE("derived series examples") {
    const auto series = derived_series(s3());
    REQUIRE(series.size() == 3);
    CHECK(series[0].order() == 6);
    CHECK(series[1].order() == 3);
    CHECK(series[2].is_trivial());
    CHECK(is_solvable(s3()));
    const auto c6 = testing::cyclic(6);
    const auto abelian = derived_series(c6);
    REQUIRE(abelian.size() == 2);
    CHECK(abelian[1].is_trivial());
    const auto a5 = testing::alternating(5);
    CHECK(derived_series(a5).size() == 1);
    CHECK_FALSE(is_solvable(a5));
    CHECK(derived_subgroup(testing::symmetric(4)).order() == 12);
  }

  TEST_CASE("quotient_p_core_check examples") {
    CHECK(quotient_p_core_check(testing::symmetric(4), 2));
    CHECK(quotient_p_core_check(testing::quaternion(), 2));
    CHECK(quotient_p_core_check(s3(), 3));
    const auto q = quotient_action(testing::symmetric(4), p_core(testing::symmetric(4), 2));
    CHECK(q.order() == 6);
    CHECK(q.degree() == 6);
  }

  TEST_CASE("predicates") {
    CHECK(is_abelian(testing::cyclic(6)));
    CHECK_FALSE(is_abelian(s3()));
    CHECK(is_p_group(testing::quaternion(), 2));
    CHECK_FALSE(is_p_group(s3(), 2));
    CHECK(is_elementary_abelian(testing::direct_product(testing::cyclic(2), testing::cyclic(2)), 2));
    CHECK_FALSE(is_elementary_abelian(testing::cyclic(4), 2));
    CHECK(is_normal(testing::alternating(5), testing::alternating(5)));
    CHECK_FALSE(is_normal(s3(), sylow_subgroup(s3(), 2)));
    CHECK(normal_closure(s3(), sylow_subgroup(s3(), 2)) == s3());
  }

  TEST_CASE("catalog: Sylow orders, normal p-cores, quotient check") {
    for (const auto& entry : catalog()) {
      CAPTURE(entry.name);
      const auto& g = entry.group;
      for (std::uint64_t p : prime_divisors(g.order())) {
        CAPTURE(p);
        const auto sylow = sylow_subgroup(g, p);
        std::uint64_t expected = 1;
        for (std::uint32_t i = 0; i < padic_valuation(g.order(), p); ++i) expected *= p;
        CHECK(sylow.order() == expected);
        CHECK(g.contains(sylow));
        const auto core = p_core(g, p);
        for (const auto& x : g.generators()) {
          for (const auto& c : core.generators()) CHECK(core.contains(conjugate(c, x)));
        }
        CHECK(is_normal(g, core));
        CHECK(quotient_p_core_check(g, p));
      }
    }
  }

  TEST_CASE("catalog: p_core matches the normal-subgroup oracle") {
    for (const auto& entry : catalog()) {
      if (entry.group.order() > 200) continue;
      CAPTURE(entry.name);
      for (std::uint64_t p : prime_divisors(entry.group.order())) {
        CHECK(p_core(entry.group, p).elements() == testing::brute_p_core(entry.group.elements(), p));
      }
    }
  }

  TEST_CASE("catalog: Sylow subgroups act faithfully on the Fitting subgroup") {
    std::size_t checked = 0;
    for (const auto& entry : catalog()) {
      const auto& g = entry.group;
      if (!is_solvable(g)) continue;
      const auto f = fitting(g);
      const auto c = centralizer(g, f);
      CHECK(f.contains(c));
      for (std::uint64_t p : prime_divisors(g.order())) {
        if (!p_core(g, p).is_trivial()) continue;
        CAPTURE(entry.name);
        CAPTURE(p);
        const auto kernel = intersect(sylow_subgroup(g, p).elements(), c.elements());
        CHECK(kernel.size() == 1);
        ++checked;
      }
    }
    CHECK(checked >= 5);
  }

  // The divisibility needs P to act faithfully on the q-Sylow, i.e. O_p(G) = 1.
  // D6 = S3 x C2 meets every other hypothesis but has a central involution.
  TEST_CASE("the complement bound needs a trivial p-core") {
    const auto d6 = testing::dihedral(6);
    CHECK(p_core(d6, 2).order() == 2);
    CHECK_FALSE(is_normal(d6, sylow_subgroup(d6, 2)));
    CHECK(p_core(d6, 3).order() == 3);
    CHECK(gamma(1, 3) % 4 != 0);
  }

  TEST_CASE("catalog: minimal normal elementary abelian Sylow bounds the complement") {
    std::size_t checked = 0;
    for (const auto& entry : catalog()) {
      const auto& g = entry.group;
      const auto parts = factorize(g.order()).parts;
      if (parts.size() != 2) continue;
      const auto normals = testing::normal_subgroups(g.elements());
      for (int which = 0; which < 2; ++which) {
        const auto [q, t] = parts[which];
        const auto [p, s] = parts[1 - which];
        std::uint64_t q_part = 1, p_part = 1;
        for (std::uint32_t i = 0; i < t; ++i) q_part *= q;
        for (std::uint32_t i = 0; i < s; ++i) p_part *= p;
        const auto sylow_q = std::find_if(normals.begin(), normals.end(), [&](const auto& n) { return n.size() == q_part; });
        const bool p_normal = std::any_of(normals.begin(), normals.end(), [&](const auto& n) { return n.size() == p_part; });
        const bool p_core_trivial = std::none_of(normals.begin(), normals.end(), [&](const auto& n) {
          return n.size() > 1 && p_part % n.size() == 0;
        });
        if (sylow_q == normals.end() || p_normal || !p_core_trivial) continue;
        bool elementary = true;
        for (const auto& x : *sylow_q) {
          if (!x.is_identity() && x.order() != q) elementary = false;
          for (const auto& y : *sylow_q) elementary = elementary && x * y == y * x;
        }
        bool minimal = true;
        for (const auto& n : normals) {
          if (n.size() > 1 && n.size() < q_part && std::includes(sylow_q->begin(), sylow_q->end(), n.begin(), n.end())) {
            minimal = false;
          }
        }
        if (!elementary || !minimal) continue;
        CAPTURE(entry.name);
        CHECK(gamma(t, q) % p_part == 0);
        ++checked;
      }
    }
    CHECK(checked >= 4);
  }
}
