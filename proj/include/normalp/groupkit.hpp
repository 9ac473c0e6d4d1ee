#pragma once

#include <cstdint>
#include <vector>

#include "normalp/perm_group.hpp"

namespace normalp {

/// Subgroups are permutation groups of the parent's degree.
using Subgroup = PermGroup;

/// Sylow p-subgroup by p-subgroup climbing: from the trivial group,
/// repeatedly adjoin the least element of N_G(P) \ P whose p-th power
/// lies in P. Trivial when p does not divide |G|.
Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p);

/// O_p(G): the intersection of all conjugates of a Sylow p-subgroup.
Subgroup p_core(const PermGroup& g, std::uint64_t p);

Subgroup normalizer(const PermGroup& g, const Subgroup& h);
Subgroup centralizer(const PermGroup& g, const Subgroup& h);

/// Smallest subgroup of g containing h and normalized by g.
Subgroup normal_closure(const PermGroup& g, const Subgroup& h);
bool is_normal(const PermGroup& g, const Subgroup& h);
bool is_abelian(const PermGroup& g);
bool is_p_group(const PermGroup& g, std::uint64_t p);
/// Abelian with every nontrivial generator of order p.
bool is_elementary_abelian(const PermGroup& g, std::uint64_t p);

/// [G, G].
Subgroup derived_subgroup(const PermGroup& g);
/// G = D0 > D1 > ... until the series stabilizes.
std::vector<Subgroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);

/// Product of the q-cores over the primes q dividing |G|.
Subgroup fitting(const PermGroup& g);

/// Frattini subgroup of a p-group, computed as the normal closure of
/// p-th powers and commutators of the generators. Throws
/// PreconditionFailed when the order is not a prime power.
Subgroup frattini_p(const PermGroup& p_group);

/// Action of G on the right cosets of a normal subgroup n, cosets ordered
/// by discovery from the trivial coset and keyed by their least element.
PermGroup quotient_action(const PermGroup& g, const Subgroup& n);

/// True iff O_p(G / O_p(G)) is trivial.
bool quotient_p_core_check(const PermGroup& g, std::uint64_t p);

/// All subgroups of a p-group, sorted by (order, element list). Throws
/// CapExceeded past cap subgroups.
std::vector<std::vector<Permutation>> p_group_subgroups(const PermGroup& p_group, std::uint64_t p,
                                                        std::size_t cap);

}  // namespace normalp
