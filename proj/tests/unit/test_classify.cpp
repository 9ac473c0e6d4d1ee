#include <doctest.h>

#include "normalp/arith.hpp"
#include "normalp/classify.hpp"
#include "normalp/error.hpp"

using namespace normalp;

namespace {

// Valuation of the materialized product, independent of the shortcut.
std::uint32_t slow_valuation(std::uint64_t m, std::uint64_t p) { return padic_valuation(big_gamma(m), p); }

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("decompose examples") {
    auto d = decompose(1600, 2);
    CHECK(d.s == 6);
    CHECK(d.m == 25);
    d = decompose(8, 2);
    CHECK(d.s == 3);
    CHECK(d.m == 1);
    d = decompose(60, 5);
    CHECK(d.s == 1);
    CHECK(d.m == 12);
    CHECK_THROWS_AS(decompose(0, 2), InvalidArgument);
    CHECK_THROWS_AS(decompose(10, 4), InvalidArgument);
  }

  TEST_CASE("classify examples") {
    auto c = classify_order(1600, 2);
    CHECK(c.verdict == Verdict::ForcedAllGroups);
    CHECK(c.solvability_guarantee == SolvabilityGuarantee::BurnsidePQ);
    CHECK(c.valuation_needed == 6);
    CHECK(c.valuation_available == 5);

    c = classify_order(60, 5);
    CHECK(c.verdict == Verdict::ForcedSolvableOnly);
    CHECK(c.solvability_guarantee == SolvabilityGuarantee::None);

    c = classify_order(864, 2);
    CHECK(c.verdict == Verdict::UniqueSolvableWitness);
    CHECK(slow_valuation(9, 2) == 4);
    CHECK(slow_valuation(3, 2) == 1);
    CHECK(slow_valuation(1, 2) == 0);

    CHECK(classify_order(8, 2).verdict == Verdict::PGroup);
    CHECK(classify_order(7, 2).verdict == Verdict::NotApplicable);
  }

  TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::ForcedAllGroups) == "FORCED_ALL_GROUPS");
    CHECK(to_string(Verdict::UniqueSolvableWitness) == "UNIQUE_SOLVABLE_WITNESS");
    CHECK(to_string(SolvabilityGuarantee::OddOrder) == "ODD_ORDER");
  }

  TEST_CASE("sieve examples") {
    const auto rows = sieve(2, 2, 12);
    const std::vector<std::pair<std::uint64_t, Verdict>> expected = {
        {2, Verdict::PGroup},
        {4, Verdict::PGroup},
        {6, Verdict::UniqueSolvableWitness},
        {8, Verdict::PGroup},
        {10, Verdict::UniqueSolvableWitness},
        {12, Verdict::ForcedAllGroups}};
    REQUIRE(rows.size() == expected.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].decomposition.n == expected[i].first);
      CHECK(rows[i].verdict == expected[i].second);
    }
    const auto sixty = sieve(5, 60, 60);
    REQUIRE(sixty.size() == 1);
    CHECK(sixty[0].verdict == Verdict::ForcedSolvableOnly);
    const auto big = sieve(2, 1600, 1600);
    REQUIRE(big.size() == 1);
    CHECK(big[0].verdict == Verdict::ForcedAllGroups);
    CHECK(sieve(7, 1, 6).empty());
    CHECK_THROWS_AS(sieve(2, 0, 5), InvalidArgument);
    CHECK_THROWS_AS(sieve(2, 9, 5), InvalidArgument);
    CHECK_THROWS_AS(sieve(6, 1, 5), InvalidArgument);
  }

  TEST_CASE("verdicts follow their definitions") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (std::uint64_t n = 1; n <= 1500; ++n) {
        const auto c = classify_order(n, p);
        const auto& d = c.decomposition;
        std::uint64_t power = 1;
        for (std::uint32_t i = 0; i < d.s; ++i) power *= p;
        REQUIRE(power * d.m == n);
        CHECK(d.m % p != 0);
        if (d.s == 0) {
          CHECK(c.verdict == Verdict::NotApplicable);
          continue;
        }
        if (d.m == 1) {
          CHECK(c.verdict == Verdict::PGroup);
          continue;
        }
        const std::uint32_t available = slow_valuation(d.m, p);
        CHECK(c.valuation_available == available);
        if (d.s <= available) {
          CHECK(c.has_witness());
          bool minimal = true;
          for (std::uint64_t md = 1; md < d.m; ++md) {
            if (d.m % md == 0 && slow_valuation(md, p) >= d.s) minimal = false;
          }
          CHECK((c.verdict == Verdict::UniqueSolvableWitness) == minimal);
        } else {
          CHECK(c.is_forced());
          const bool prime_power = factorize(d.m).parts.size() == 1;
          CHECK((c.verdict == Verdict::ForcedAllGroups) == (prime_power || n % 2 == 1));
        }
      }
    }
  }

  TEST_CASE("witness verdicts persist under multiples of m") {
    for (std::uint64_t p : {2, 3, 5}) {
      for (std::uint32_t s = 1; s <= 5; ++s) {
        std::uint64_t power = 1;
        for (std::uint32_t i = 0; i < s; ++i) power *= p;
        for (std::uint64_t m = 2; m <= 200; ++m) {
          if (m % p == 0 || !classify_order(power * m, p).has_witness()) continue;
          for (std::uint64_t k = 2; m * k <= 600; ++k) {
            if ((m * k) % p == 0) continue;
            CHECK_MESSAGE(classify_order(power * m * k, p).has_witness(), "p=" << p << " s=" << s << " m=" << m * k);
          }
        }
      }
    }
  }

  TEST_CASE("guarantee families") {
    CHECK(classify_order(8, 2).solvability_guarantee == SolvabilityGuarantee::BurnsidePQ);
    CHECK(classify_order(45, 3).solvability_guarantee == SolvabilityGuarantee::BurnsidePQ);
    CHECK(classify_order(105, 3).solvability_guarantee == SolvabilityGuarantee::OddOrder);
    CHECK(classify_order(60, 2).solvability_guarantee == SolvabilityGuarantee::None);
  }

  TEST_CASE("sieve agrees with pointwise classification") {
    for (std::uint64_t p : {2, 3, 7}) {
      const auto rows = sieve(p, 1, 3000);
      std::uint64_t expected_n = p;
      for (const auto& row : rows) {
        CHECK(row.decomposition.n == expected_n);
        CHECK(row.verdict == classify_order(expected_n, p).verdict);
        expected_n += p;
      }
      CHECK(rows.size() == 3000 / p);
    }
  }
}
