#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the Permutation value type.

#include <cstdint>
#include <set>
#include <vector>

#include "normalp/permutation.hpp"

namespace normalp::testing {

/// All elements of <gens> by breadth-first closure, sorted.
std::vector<Permutation> closure_elements(std::size_t degree, const std::vector<Permutation>& gens);

/// Conjugacy classes of a group given by its full element list.
std::vector<std::vector<Permutation>> conjugacy_classes(const std::vector<Permutation>& elements);

/// Every normal subgroup, each as a sorted element list, found by
/// closing unions of conjugacy classes.
std::vector<std::vector<Permutation>> normal_subgroups(const std::vector<Permutation>& elements);

/// Every subgroup, as sorted element lists, by closing joins of cyclic
/// subgroups. Only for small groups.
std::vector<std::vector<Permutation>> all_subgroups(const std::vector<Permutation>& elements);

/// Largest normal subgroup of p-power order.
std::vector<Permutation> brute_p_core(const std::vector<Permutation>& elements, std::uint64_t p);

/// Invertible t x t matrices over F_q counted through the Leibniz
/// determinant of every matrix.
std::uint64_t brute_gl_count(std::uint32_t t, std::uint32_t q);

/// Connected components of a graph on n vertices.
std::size_t union_find_components(std::size_t n, const std::vector<std::vector<std::uint32_t>>& edges);

}  // namespace normalp::testing
