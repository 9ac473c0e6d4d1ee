#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace normalp {

/// n = p^s * m with p not dividing m.
struct OrderDecomposition {
  std::uint64_t n = 1;
  std::uint64_t p = 2;
  std::uint32_t s = 0;
  std::uint64_t m = 1;
};

enum class Verdict {
  NotApplicable,        // p does not divide n
  PGroup,               // n is a power of p
  ForcedAllGroups,      // every group of order n has O_p(G) != 1
  ForcedSolvableOnly,   // every solvable group of order n has O_p(G) != 1
  WitnessExists,        // some group of order n has O_p(G) = 1
  UniqueSolvableWitness // exactly one solvable group of order n has O_p(G) = 1
};

enum class SolvabilityGuarantee {
  BurnsidePQ,  // n = p^a q^b
  OddOrder,    // n odd
  None,
};

struct Classification {
  OrderDecomposition decomposition;
  Verdict verdict = Verdict::NotApplicable;
  std::uint32_t valuation_needed = 0;
  std::uint32_t valuation_available = 0;
  SolvabilityGuarantee solvability_guarantee = SolvabilityGuarantee::None;

  bool is_forced() const noexcept {
    return verdict == Verdict::ForcedAllGroups || verdict == Verdict::ForcedSolvableOnly;
  }
  bool has_witness() const noexcept {
    return verdict == Verdict::WitnessExists || verdict == Verdict::UniqueSolvableWitness;
  }
};

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(SolvabilityGuarantee g) noexcept;

OrderDecomposition decompose(std::uint64_t n, std::uint64_t p);

Classification classify_order(std::uint64_t n, std::uint64_t p);

/// One classification per n in [lo, hi] divisible by p, ordered by n.
std::vector<Classification> sieve(std::uint64_t p, std::uint64_t lo, std::uint64_t hi);

}  // namespace normalp
