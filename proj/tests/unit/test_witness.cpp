#include <doctest.h>

#include "normalp/classify.hpp"
#include "normalp/error.hpp"
#include "normalp/groupkit.hpp"
#include "normalp/witness.hpp"

using namespace normalp;

namespace {

PermGroup linear_group(const KSpace& k, const std::vector<AutKElement>& gens) {
  std::vector<Permutation> perms;
  for (const auto& s : gens) perms.push_back(linear_permutation(k, s));
  return PermGroup(k.size(), perms);
}

PermGroup rebuild_without_first_translation(const KSpace& k, const WitnessCertificate& cert) {
  auto translations = translation_generators(k);
  translations.erase(translations.begin());
  for (const auto& s : cert.complement) translations.push_back(linear_permutation(k, s));
  return PermGroup(k.size(), translations);
}

}  // namespace

TEST_SUITE("witness") {
  TEST_CASE("build_k examples") {
    auto k = build_k(12);
    REQUIRE(k.blocks().size() == 2);
    CHECK(k.blocks()[0].prime == 2);
    CHECK(k.blocks()[0].dimension == 2);
    CHECK(k.blocks()[1].prime == 3);
    CHECK(k.blocks()[1].dimension == 1);
    CHECK(k.size() == 12);
    k = build_k(5);
    CHECK(k.blocks().size() == 1);
    CHECK(k.size() == 5);
    k = build_k(27);
    REQUIRE(k.blocks().size() == 1);
    CHECK(k.blocks()[0].prime == 3);
    CHECK(k.blocks()[0].dimension == 3);
    CHECK(k.size() == 27);
    CHECK_THROWS_AS(build_k(1), InvalidArgument);
  }

  TEST_CASE("point codec is a bijection starting at zero") {
    for (std::uint64_t m : {2, 12, 27, 60, 72, 100, 210, 243}) {
      const auto k = build_k(m);
      for (Point x = 0; x < m; ++x) CHECK(k.encode(k.decode(x)) == x);
      for (const auto& block : k.decode(0)) {
        for (auto c : block) CHECK(c == 0);
      }
    }
  }

  TEST_CASE("aut_sylow_p examples") {
    const auto k3 = build_k(3);
    const auto h3 = aut_sylow_p(k3, 2);
    REQUIRE(h3.size() == 1);
    CHECK(h3[0].blocks[0] == GFMatrix(1, 3, {2}));
    CHECK(linear_group(k3, h3).order() == 2);
    CHECK(linear_group(build_k(27), aut_sylow_p(build_k(27), 2)).order() == 32);
    CHECK(aut_sylow_p(build_k(12), 5).empty());
    CHECK_THROWS_AS(aut_sylow_p(build_k(12), 3), PreconditionFailed);
  }

  TEST_CASE("aut_sylow_p reaches the full Sylow order") {
    for (std::uint64_t m : {12, 20, 45, 63, 72, 100, 128, 243, 225}) {
      const auto k = build_k(m);
      for (std::uint64_t p : {2, 3, 5, 7}) {
        if (m % p == 0) continue;
        std::uint64_t expected = 1;
        for (std::uint32_t i = 0; i < big_gamma_valuation(m, p); ++i) expected *= p;
        CAPTURE(m);
        CAPTURE(p);
        CHECK(linear_group(k, aut_sylow_p(k, p)).order() == expected);
      }
    }
  }

  TEST_CASE("descend_to_order examples") {
    const auto k = build_k(27);
    const auto h = aut_sylow_p(k, 2);
    CHECK(descend_to_order(k, h, 2, 5) == h);
    CHECK(linear_group(k, descend_to_order(k, h, 2, 3)).order() == 8);
    CHECK(linear_group(k, descend_to_order(k, h, 2, 0)).order() == 1);
    const auto k5 = build_k(5);
    const auto h5 = aut_sylow_p(k5, 2);
    CHECK(linear_group(k5, h5).order() == 4);
    CHECK_THROWS_AS(descend_to_order(k5, h5, 2, 5), PreconditionFailed);
  }

  TEST_CASE("linear maps round-trip through permutations") {
    const auto k = build_k(72);
    for (const auto& s : aut_sylow_p(k, 5)) CHECK(linear_from_permutation(k, linear_permutation(k, s)) == s);
    for (const auto& s : aut_sylow_p(k, 7)) CHECK(linear_from_permutation(k, linear_permutation(k, s)) == s);
  }

  TEST_CASE("construct_witness examples") {
    const auto six = construct_witness(6, 2);
    CHECK(six.group.degree() == 3);
    CHECK(six.group.order() == 6);
    CHECK(p_core(six.group, 2).is_trivial());
    CHECK(six.checks.all());
    CHECK(verify_witness(six));

    const auto big = construct_witness(864, 2);
    CHECK(big.group.degree() == 27);
    CHECK(big.group.order() == 864);
    CHECK(p_core(big.group, 2).is_trivial());
    CHECK(is_solvable(big.group));
    CHECK(verify_witness(big));

    CHECK_THROWS_AS(construct_witness(60, 5), PreconditionFailed);
    CHECK_THROWS_AS(construct_witness(1600, 2), PreconditionFailed);
    CHECK_THROWS_AS(construct_witness(864, 2, GroupLimits{500, 500}), CapExceeded);
  }

  TEST_CASE("refusal names the failing divisibility") {
    try {
      construct_witness(1600, 2);
      FAIL("expected refusal");
    } catch (const PreconditionFailed& e) {
      const std::string what = e.what();
      CHECK(what.find("2^6") != std::string::npos);
      CHECK(what.find("FORCED_ALL_GROUPS") != std::string::npos);
    }
  }

  TEST_CASE("a certificate missing a translation fails verification") {
    auto cert = construct_witness(6, 2);
    REQUIRE(verify_witness(cert));
    cert.group = rebuild_without_first_translation(build_k(cert.m), cert);
    CHECK(cert.group.order() == 2);
    CHECK_FALSE(compute_witness_checks(cert).order_ok);
    CHECK_FALSE(verify_witness(cert));
  }

  TEST_CASE("an irreducible complement regenerates a deleted translation") {
    // H acts irreducibly on F_3^3, so the remaining translations and H
    // still generate the whole group.
    auto cert = construct_witness(864, 2);
    cert.group = rebuild_without_first_translation(build_k(cert.m), cert);
    CHECK(cert.group.order() == 864);
    CHECK(verify_witness(cert));
  }

  TEST_CASE("certificates without translations fail verification") {
    for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{6, 2}, {864, 2}, {80, 5}, {448, 7}}) {
      auto cert = construct_witness(n, p);
      REQUIRE(verify_witness(cert));
      const auto k = build_k(cert.m);
      cert.group = linear_group(k, cert.complement);
      const auto checks = compute_witness_checks(cert);
      CHECK_FALSE(checks.order_ok);
      CHECK_FALSE(checks.transitive_on_k);
      CHECK_FALSE(verify_witness(cert));
    }
  }

  TEST_CASE("stabilizer of zero is the complement and translations are regular") {
    for (std::uint64_t p : {2, 3, 5}) {
      for (std::uint64_t n = p; n <= 300; n += p) {
        if (!classify_order(n, p).has_witness()) continue;
        CAPTURE(n);
        CAPTURE(p);
        const auto cert = construct_witness(n, p);
        const auto k = build_k(cert.m);
        const auto h = linear_group(k, cert.complement);
        CHECK(cert.group.point_stabilizer(0) == h);
        std::uint64_t p_part = 1;
        for (std::uint32_t i = 0; i < cert.s; ++i) p_part *= p;
        CHECK(h.order() == p_part);
        const PermGroup translations(k.size(), translation_generators(k));
        CHECK(translations.order() == cert.m);
        CHECK(translations.is_transitive());
        CHECK(is_abelian(translations));
        CHECK(cert.group.contains(translations));
        CHECK(verify_witness(cert));
      }
    }
  }

  TEST_CASE("unique witnesses have elementary abelian Sylow cores") {
    std::size_t checked = 0;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (std::uint64_t n = p; n <= 400; n += p) {
        const auto c = classify_order(n, p);
        if (c.verdict != Verdict::UniqueSolvableWitness) continue;
        CAPTURE(n);
        CAPTURE(p);
        const auto cert = construct_witness(n, p);
        for (const auto& part : factorize(cert.m).parts) {
          const auto core = p_core(cert.group, part.prime);
          std::uint64_t q_part = 1;
          for (std::uint32_t i = 0; i < part.exponent; ++i) q_part *= part.prime;
          CHECK(core.order() == q_part);
          CHECK(is_elementary_abelian(core, part.prime));
          CHECK(frattini_p(core).is_trivial());
        }
        ++checked;
      }
    }
    CHECK(checked > 20);
  }

  TEST_CASE("construction is deterministic") {
    const auto a = construct_witness(864, 2);
    const auto b = construct_witness(864, 2);
    CHECK(a.group.generators() == b.group.generators());
    CHECK(a.complement == b.complement);
  }
}
