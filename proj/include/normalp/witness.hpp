#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "normalp/arith.hpp"
#include "normalp/gfmatrix.hpp"
#include "normalp/perm_group.hpp"

namespace normalp {

/// K = C_{q1}^{t1} x ... x C_{qk}^{tk} with a mixed-radix point codec:
/// blocks in factorization order, coordinates little-endian inside a
/// block, so point 0 is the zero vector.
class KSpace {
 public:
  struct Block {
    std::uint32_t prime = 0;
    std::uint32_t dimension = 0;
  };

  /// Throws InvalidArgument for m < 2.
  explicit KSpace(std::uint64_t m);

  std::uint64_t size() const noexcept { return size_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// Coordinates of a point, one vector per block.
  std::vector<std::vector<std::uint32_t>> decode(Point x) const;
  Point encode(const std::vector<std::vector<std::uint32_t>>& coords) const;

 private:
  std::uint64_t size_ = 1;
  std::vector<Block> blocks_;
  std::vector<std::uint64_t> block_stride_;
};

KSpace build_k(std::uint64_t m);

/// Automorphism of K acting blockwise; block i is a t_i x t_i matrix over F_{q_i}.
struct AutKElement {
  std::vector<GFMatrix> blocks;

  friend bool operator==(const AutKElement&, const AutKElement&) = default;
};

/// x -> Sx + k on K.
struct AffineMap {
  AutKElement linear;
  std::vector<std::vector<std::uint32_t>> translation;
};

Permutation affine_permutation(const KSpace& k, const AffineMap& map);
Permutation linear_permutation(const KSpace& k, const AutKElement& s);
/// Recovers the blockwise matrices from a linear permutation of K.
AutKElement linear_from_permutation(const KSpace& k, const Permutation& perm);
/// Translations x -> x + e for each basis vector e of each block.
std::vector<Permutation> translation_generators(const KSpace& k);

/// Above this |GL(t, q)| a block's Sylow subgroup is built structurally
/// rather than by climbing through the enumerated group.
inline constexpr std::uint64_t kGlEnumerationCap = 50'000;

/// Generators of a Sylow p-subgroup of Aut(K), block by block.
std::vector<AutKElement> aut_sylow_p(const KSpace& k, std::uint64_t p);

/// Generators of a subgroup of order exactly p^s inside the p-group
/// generated by gens, found by repeatedly passing to the maximal subgroup
/// that is the kernel of the last coordinate character on H / Phi(H).
/// Throws PreconditionFailed when the group is smaller than p^s.
std::vector<AutKElement> descend_to_order(const KSpace& k, std::span<const AutKElement> gens,
                                          std::uint64_t p, std::uint32_t s,
                                          GroupLimits limits = {});

struct WitnessChecks {
  bool order_ok = false;
  bool p_core_trivial = false;
  bool solvable = false;
  bool transitive_on_k = false;
  bool point_stabilizer_is_sylow = false;

  bool all() const noexcept {
    return order_ok && p_core_trivial && solvable && transitive_on_k && point_stabilizer_is_sylow;
  }
};

struct WitnessCertificate {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint32_t s = 0;
  std::uint64_t m = 0;
  PermGroup group = PermGroup::trivial(1);
  /// Generators of the point stabilizer H inside Aut(K).
  std::vector<AutKElement> complement;
  WitnessChecks checks;
};

/// The semidirect product K : H acting on K, with H of order p^s.
/// Throws PreconditionFailed unless classify_order(n, p) has a witness verdict.
WitnessCertificate construct_witness(std::uint64_t n, std::uint64_t p, GroupLimits limits = {});

/// Recomputes every check from cert.group alone.
WitnessChecks compute_witness_checks(const WitnessCertificate& cert);
bool verify_witness(const WitnessCertificate& cert);

}  // namespace normalp
