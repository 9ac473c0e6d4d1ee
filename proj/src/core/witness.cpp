#include "normalp/witness.hpp"

#include <string>

#include "normalp/classify.hpp"
#include "normalp/error.hpp"
#include "normalp/groupkit.hpp"

namespace normalp {
namespace {

AutKElement identity_aut(const KSpace& k) {
  AutKElement out;
  for (const auto& b : k.blocks()) out.blocks.push_back(GFMatrix::identity(b.dimension, b.prime));
  return out;
}

std::string refusal_message(const Classification& c) {
  const auto& d = c.decomposition;
  const std::string p = std::to_string(d.p);
  switch (c.verdict) {
    case Verdict::NotApplicable:
      return p + " does not divide " + std::to_string(d.n) + "; no witness to construct";
    case Verdict::PGroup:
      return std::to_string(d.n) + " is a power of " + p + "; every group of that order is its own " + p +
             "-core";
    default:
      return p + "^" + std::to_string(d.s) + " does not divide Gamma(" + std::to_string(d.m) + "): v_" + p +
             "(Gamma(" + std::to_string(d.m) + ")) = " + std::to_string(c.valuation_available) + " < " +
             std::to_string(d.s) + " (verdict " + std::string(to_string(c.verdict)) + ")";
  }
}

}  // namespace

KSpace::KSpace(std::uint64_t m) {
  if (m < 2) throw InvalidArgument("K needs m >= 2, got " + std::to_string(m));
  if (m > std::uint64_t{0xFFFFFFFFU}) throw InvalidArgument("K is too large to index by points");
  size_ = m;
  std::uint64_t stride = 1;
  for (const auto& part : factorize(m).parts) {
    blocks_.push_back({static_cast<std::uint32_t>(part.prime), part.exponent});
    block_stride_.push_back(stride);
    stride *= checked_pow(part.prime, part.exponent);
  }
}

std::vector<std::vector<std::uint32_t>> KSpace::decode(Point x) const {
  if (x >= size_) throw InvalidArgument("point outside K");
  std::vector<std::vector<std::uint32_t>> coords;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    std::uint64_t local = x / block_stride_[i];
    std::vector<std::uint32_t> v(b.dimension);
    for (auto& c : v) {
      c = static_cast<std::uint32_t>(local % b.prime);
      local /= b.prime;
    }
    coords.push_back(std::move(v));
  }
  return coords;
}

Point KSpace::encode(const std::vector<std::vector<std::uint32_t>>& coords) const {
  if (coords.size() != blocks_.size()) throw InvalidArgument("coordinate block count mismatch");
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (coords[i].size() != b.dimension) throw InvalidArgument("coordinate dimension mismatch");
    std::uint64_t local = 0;
    for (std::uint32_t c = b.dimension; c-- > 0;) local = local * b.prime + coords[i][c] % b.prime;
    x += local * block_stride_[i];
  }
  return static_cast<Point>(x);
}

KSpace build_k(std::uint64_t m) { return KSpace(m); }

Permutation affine_permutation(const KSpace& k, const AffineMap& map) {
  const auto& blocks = k.blocks();
  if (map.linear.blocks.size() != blocks.size() || map.translation.size() != blocks.size()) {
    throw InvalidArgument("affine map does not match the blocks of K");
  }
  std::vector<Point> images(k.size());
  for (Point x = 0; x < k.size(); ++x) {
    auto coords = k.decode(x);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto y = map.linear.blocks[i].apply(coords[i]);
      for (std::size_t c = 0; c < y.size(); ++c) y[c] = (y[c] + map.translation[i][c]) % blocks[i].prime;
      coords[i] = std::move(y);
    }
    images[x] = k.encode(coords);
  }
  return Permutation(std::move(images));
}

Permutation linear_permutation(const KSpace& k, const AutKElement& s) {
  AffineMap map{s, {}};
  for (const auto& b : k.blocks()) map.translation.emplace_back(b.dimension, 0);
  return affine_permutation(k, map);
}

AutKElement linear_from_permutation(const KSpace& k, const Permutation& perm) {
  AutKElement out = identity_aut(k);
  const auto& blocks = k.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::uint32_t j = 0; j < blocks[i].dimension; ++j) {
      auto coords = k.decode(0);
      coords[i][j] = 1;
      const auto image = k.decode(perm(k.encode(coords)));
      for (std::uint32_t r = 0; r < blocks[i].dimension; ++r) out.blocks[i].set(r, j, image[i][r]);
    }
  }
  return out;
}

std::vector<Permutation> translation_generators(const KSpace& k) {
  std::vector<Permutation> gens;
  const AutKElement id = identity_aut(k);
  const auto& blocks = k.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::uint32_t j = 0; j < blocks[i].dimension; ++j) {
      AffineMap map{id, {}};
      for (const auto& b : blocks) map.translation.emplace_back(b.dimension, 0);
      map.translation[i][j] = 1;
      gens.push_back(affine_permutation(k, map));
    }
  }
  return gens;
}

std::vector<AutKElement> aut_sylow_p(const KSpace& k, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
  std::vector<AutKElement> gens;
  const auto& blocks = k.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.prime == p) throw PreconditionFailed("p divides |K|");
    if (gamma_valuation(b.dimension, b.prime, p) == 0) continue;
    const bool small = gl_order(b.dimension, b.prime) <= kGlEnumerationCap;
    const std::vector<GFMatrix> block_gens =
        small ? sylow_gl_by_climbing(b.dimension, b.prime, p, kGlEnumerationCap)
              : sylow_gl_structured(b.dimension, b.prime, p);
    for (const auto& g : block_gens) {
      AutKElement e = identity_aut(k);
      e.blocks[i] = g;
      gens.push_back(std::move(e));
    }
  }
  return gens;
}

std::vector<AutKElement> descend_to_order(const KSpace& k, std::span<const AutKElement> gens,
                                          std::uint64_t p, std::uint32_t s, GroupLimits limits) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(linear_permutation(k, g));
  PermGroup h(k.size(), std::move(perms), limits);
  if (!is_p_group(h, p)) throw PreconditionFailed("descent needs a " + std::to_string(p) + "-group");
  const std::uint64_t target = checked_pow(p, s);
  if (h.order() < target) {
    throw PreconditionFailed("group of order " + std::to_string(h.order()) + " has no subgroup of order " +
                             std::to_string(p) + "^" + std::to_string(s));
  }
  if (h.order() == target) return {gens.begin(), gens.end()};

  while (h.order() > target) {
    const Subgroup phi = frattini_p(h);
    // Least-first basis of H / Phi(H); dropping the last basis vector gives
    // the kernel of the character that reads the last coordinate.
    std::vector<Permutation> basis;
    PermGroup span = phi;
    for (const auto& x : h.elements()) {
      if (span.order() == h.order()) break;
      if (span.contains(x)) continue;
      basis.push_back(x);
      const Permutation extra[] = {x};
      span = span.with_generators(extra);
    }
    basis.pop_back();
    h = phi.with_generators(basis);
  }
  const PermGroup reduced = PermGroup::from_elements(k.size(), h.elements(), limits);
  std::vector<AutKElement> out;
  for (const auto& g : reduced.generators()) out.push_back(linear_from_permutation(k, g));
  return out;
}

WitnessCertificate construct_witness(std::uint64_t n, std::uint64_t p, GroupLimits limits) {
  const Classification c = classify_order(n, p);
  if (!c.has_witness()) throw PreconditionFailed(refusal_message(c));
  if (n > limits.order_cap) {
    throw CapExceeded("witness order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.order_cap));
  }
  const auto& d = c.decomposition;
  const KSpace k = build_k(d.m);
  std::vector<AutKElement> complement = descend_to_order(k, aut_sylow_p(k, p), p, d.s, limits);

  // Drop redundant generators greedily, first to last.
  for (std::size_t i = 0; i < complement.size();) {
    std::vector<Permutation> all, rest;
    for (std::size_t j = 0; j < complement.size(); ++j) {
      Permutation perm = linear_permutation(k, complement[j]);
      if (j != i) rest.push_back(perm);
      all.push_back(std::move(perm));
    }
    if (PermGroup(k.size(), rest, limits).order() == PermGroup(k.size(), all, limits).order()) {
      complement.erase(complement.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  std::vector<Permutation> gens = translation_generators(k);
  for (const auto& s : complement) gens.push_back(linear_permutation(k, s));

  WitnessCertificate cert;
  cert.n = n;
  cert.p = p;
  cert.s = d.s;
  cert.m = d.m;
  cert.group = PermGroup(k.size(), std::move(gens), limits);
  cert.complement = std::move(complement);
  cert.checks = compute_witness_checks(cert);
  return cert;
}

WitnessChecks compute_witness_checks(const WitnessCertificate& cert) {
  WitnessChecks checks;
  const PermGroup& g = cert.group;
  const bool degree_ok = g.degree() == cert.m;
  checks.order_ok = degree_ok && g.order() == cert.n;
  checks.p_core_trivial = p_core(g, cert.p).is_trivial();
  checks.solvable = is_solvable(g);
  checks.transitive_on_k = degree_ok && g.is_transitive();
  if (g.degree() > 0) {
    const std::uint64_t sylow_order = checked_pow(cert.p, padic_valuation(g.order(), cert.p));
    const std::uint64_t stabilizer_order = g.point_stabilizer(0).order();
    checks.point_stabilizer_is_sylow =
        stabilizer_order == checked_pow(cert.p, cert.s) && stabilizer_order == sylow_order;
  }
  return checks;
}

bool verify_witness(const WitnessCertificate& cert) {
  try {
    return compute_witness_checks(cert).all();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace normalp
