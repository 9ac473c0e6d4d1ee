#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "normalp/arith.hpp"
#include "normalp/perm_group.hpp"

namespace normalp {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

inline constexpr std::size_t kDefaultPosetCap = 5000;

/// Nontrivial p-subgroups of G under inclusion. Each element is the sorted
/// member list of one subgroup; elements are ordered by (order, members),
/// so i < j whenever elements[i] is a proper subgroup of elements[j].
struct SubgroupPoset {
  std::vector<std::vector<Permutation>> elements;
  /// Pairs (i, j) with elements[i] strictly contained in elements[j].
  std::vector<std::pair<std::size_t, std::size_t>> relation;
};

/// faces[d] lists the d-simplices as increasing vertex lists, lexicographically.
struct SimplicialComplex {
  std::vector<std::vector<std::vector<std::uint32_t>>> faces;

  std::size_t vertex_count() const { return faces.empty() ? 0 : faces.front().size(); }
  std::size_t dimension_count() const { return faces.size(); }
};

struct HomologyResult {
  /// No simplices at all: the only nonzero reduced group is in degree -1.
  bool empty = true;
  std::vector<std::size_t> face_counts;
  /// Reduced Betti numbers by degree, 0 .. top dimension.
  std::vector<std::uint64_t> betti;
  /// Torsion coefficients (> 1) of reduced homology by degree.
  std::vector<std::vector<BigInt>> torsion;
  std::size_t components = 0;
  bool connected = false;
  /// All reduced homology vanishes. Says nothing about contractibility.
  bool acyclic = false;

  /// Reduced Euler characteristic from face counts: sum (-1)^d f_d - 1.
  std::int64_t reduced_euler_from_faces() const;
  /// Alternating sum of reduced Betti numbers.
  std::int64_t reduced_euler_from_betti() const;
};

/// Throws CapExceeded when there are more than cap nontrivial p-subgroups.
SubgroupPoset p_subgroup_poset(const PermGroup& g, std::uint64_t p, std::size_t cap = kDefaultPosetCap);

SimplicialComplex order_complex(const SubgroupPoset& poset);

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
std::vector<BigInt> smith_normal_form(IntMatrix m);

/// Boundary map from d-simplices to (d-1)-simplices; for d = 0 the
/// augmentation row of ones. Rows and columns follow face order.
IntMatrix boundary_matrix(const SimplicialComplex& complex, std::size_t d);

HomologyResult reduced_homology(const SimplicialComplex& complex);

/// Reduced homology of the order complex of nontrivial p-subgroups.
HomologyResult brown_complex_homology(const PermGroup& g, std::uint64_t p,
                                      std::size_t cap = kDefaultPosetCap);

}  // namespace normalp
