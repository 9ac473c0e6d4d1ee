#include "normalp/classify.hpp"

#include <string>

#include "normalp/arith.hpp"
#include "normalp/error.hpp"

namespace normalp {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::PGroup: return "P_GROUP";
    case Verdict::ForcedAllGroups: return "FORCED_ALL_GROUPS";
    case Verdict::ForcedSolvableOnly: return "FORCED_SOLVABLE_ONLY";
    case Verdict::WitnessExists: return "WITNESS_EXISTS";
    case Verdict::UniqueSolvableWitness: return "UNIQUE_SOLVABLE_WITNESS";
  }
  return "UNKNOWN";
}

std::string_view to_string(SolvabilityGuarantee g) noexcept {
  switch (g) {
    case SolvabilityGuarantee::BurnsidePQ: return "BURNSIDE_PQ";
    case SolvabilityGuarantee::OddOrder: return "ODD_ORDER";
    case SolvabilityGuarantee::None: return "NONE";
  }
  return "UNKNOWN";
}

OrderDecomposition decompose(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InvalidArgument("order must be positive");
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
  OrderDecomposition d{n, p, 0, n};
  while (d.m % p == 0) {
    d.m /= p;
    ++d.s;
  }
  return d;
}

Classification classify_order(std::uint64_t n, std::uint64_t p) {
  Classification c;
  c.decomposition = decompose(n, p);
  const auto& d = c.decomposition;
  c.valuation_needed = d.s;

  const Factorization mf = factorize(d.m);
  // m = 1 is p^s q^0, which Burnside's theorem covers as well.
  if (d.m == 1 || mf.is_prime_power()) {
    c.solvability_guarantee = SolvabilityGuarantee::BurnsidePQ;
  } else if (n % 2 == 1) {
    c.solvability_guarantee = SolvabilityGuarantee::OddOrder;
  }

  if (d.s == 0) {
    c.verdict = Verdict::NotApplicable;
    return c;
  }
  c.valuation_available = big_gamma_valuation(d.m, p);
  if (d.m == 1) {
    c.verdict = Verdict::PGroup;
    return c;
  }
  if (d.s > c.valuation_available) {
    c.verdict = c.solvability_guarantee == SolvabilityGuarantee::None ? Verdict::ForcedSolvableOnly
                                                                      : Verdict::ForcedAllGroups;
    return c;
  }
  c.verdict = Verdict::UniqueSolvableWitness;
  for (std::uint64_t divisor : divisors(mf)) {
    if (divisor == d.m) continue;
    if (big_gamma_valuation(divisor, p) >= d.s) {
      c.verdict = Verdict::WitnessExists;
      break;
    }
  }
  return c;
}

std::vector<Classification> sieve(std::uint64_t p, std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0 || lo > hi) {
    throw InvalidArgument("sieve range must satisfy 1 <= lo <= hi");
  }
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
  std::vector<Classification> rows;
  const std::uint64_t rem = lo % p;
  const std::uint64_t first = rem == 0 ? lo : lo + (p - rem);
  if (first < lo) return rows;
  for (std::uint64_t n = first; n <= hi; n += p) {
    rows.push_back(classify_order(n, p));
    if (n > hi - p) break;
  }
  return rows;
}

}  // namespace normalp
