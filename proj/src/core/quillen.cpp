#include "normalp/quillen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "normalp/error.hpp"
#include "normalp/groupkit.hpp"

namespace normalp {
namespace {

std::size_t count_components(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  if (complex.faces.size() > 1) {
    for (const auto& edge : complex.faces[1]) {
      const std::size_t a = find(edge[0]);
      const std::size_t b = find(edge[1]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::int64_t HomologyResult::reduced_euler_from_faces() const {
  std::int64_t chi = -1;
  for (std::size_t d = 0; d < face_counts.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(face_counts[d]);
  }
  return chi;
}

std::int64_t HomologyResult::reduced_euler_from_betti() const {
  if (empty) return -1;
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(betti[d]);
  }
  return chi;
}

SubgroupPoset p_subgroup_poset(const PermGroup& g, std::uint64_t p, std::size_t cap) {
  SubgroupPoset poset;
  const PermGroup sylow = sylow_subgroup(g, p);
  if (sylow.is_trivial()) return poset;

  // Every p-subgroup is conjugate into the chosen Sylow subgroup.
  std::set<std::vector<Permutation>> seen;
  std::vector<std::vector<Permutation>> found;
  for (auto& sub : p_group_subgroups(sylow, p, cap + 1)) {
    if (sub.size() == 1) continue;
    seen.insert(sub);
    found.push_back(std::move(sub));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& x : g.generators()) {
      const Permutation inv = x.inverse();
      std::vector<Permutation> conj;
      conj.reserve(found[i].size());
      for (const auto& y : found[i]) conj.push_back(inv * y * x);
      std::sort(conj.begin(), conj.end());
      if (!seen.insert(conj).second) continue;
      found.push_back(std::move(conj));
      if (found.size() > cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " nontrivial " + std::to_string(p) +
                          "-subgroups");
      }
    }
  }
  if (found.size() > cap) {
    throw CapExceeded("more than " + std::to_string(cap) + " nontrivial " + std::to_string(p) + "-subgroups");
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  poset.elements = std::move(found);
  const auto& elems = poset.elements;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (elems[i].size() >= elems[j].size() || elems[j].size() % elems[i].size() != 0) continue;
      if (std::includes(elems[j].begin(), elems[j].end(), elems[i].begin(), elems[i].end())) {
        poset.relation.emplace_back(i, j);
      }
    }
  }
  std::sort(poset.relation.begin(), poset.relation.end());
  return poset;
}

SimplicialComplex order_complex(const SubgroupPoset& poset) {
  SimplicialComplex complex;
  const std::size_t n = poset.elements.size();
  if (n == 0) return complex;
  std::vector<std::vector<std::uint32_t>> up(n);
  for (const auto& [i, j] : poset.relation) up[i].push_back(static_cast<std::uint32_t>(j));
  for (auto& list : up) std::sort(list.begin(), list.end());

  std::vector<std::uint32_t> chain;
  auto extend = [&](auto&& self) -> void {
    const std::size_t d = chain.size() - 1;
    if (complex.faces.size() <= d) complex.faces.resize(d + 1);
    complex.faces[d].push_back(chain);
    for (std::uint32_t next : up[chain.back()]) {
      chain.push_back(next);
      self(self);
      chain.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    chain.assign(1, v);
    extend(extend);
  }
  for (auto& level : complex.faces) std::sort(level.begin(), level.end());
  return complex;
}

std::vector<BigInt> smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<BigInt> invariants;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: a unit if one exists, otherwise the smallest nonzero entry.
    std::size_t pr = rows, pc = cols;
    BigInt best = 0;
    for (std::size_t i = t; i < rows && !(best == 1); ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        const BigInt v = abs_value(a[i][j]);
        if (best == 0 || v < best) {
          best = v;
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) {
          if (a[t][j] != 0) a[i][j] -= q * a[t][j];
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) {
          if (a[i][t] != 0) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived; move the smallest entry of row/column t to the pivot.
        std::size_t br = t, bc = t;
        BigInt small = abs_value(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] != 0 && abs_value(a[i][t]) < small) {
            small = abs_value(a[i][t]);
            br = i;
            bc = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] != 0 && abs_value(a[t][j]) < small) {
            small = abs_value(a[t][j]);
            br = t;
            bc = j;
          }
        }
        std::swap(a[t], a[br]);
        swap_cols(t, bc);
        continue;
      }
      if (abs_value(a[t][t]) == 1) break;
      // Divisibility: fold any row with an entry the pivot does not divide.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    invariants.push_back(abs_value(a[t][t]));
  }
  return invariants;
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, std::size_t d) {
  if (d >= complex.faces.size()) throw InvalidArgument("no simplices of that dimension");
  const auto& cells = complex.faces[d];
  if (d == 0) return IntMatrix(1, std::vector<BigInt>(cells.size(), 1));
  const auto& lower = complex.faces[d - 1];
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  IntMatrix m(lower.size(), std::vector<BigInt>(cells.size(), 0));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (std::size_t drop = 0; drop < cells[c].size(); ++drop) {
      std::vector<std::uint32_t> face = cells[c];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      m[index.at(face)][c] = drop % 2 == 0 ? 1 : -1;
    }
  }
  return m;
}

HomologyResult reduced_homology(const SimplicialComplex& complex) {
  HomologyResult result;
  if (complex.faces.empty() || complex.faces.front().empty()) return result;
  result.empty = false;
  const std::size_t top = complex.faces.size();
  for (const auto& level : complex.faces) result.face_counts.push_back(level.size());

  // snf[d] holds the invariants of the boundary out of degree d.
  std::vector<std::vector<BigInt>> snf(top + 1);
  for (std::size_t d = 0; d < top; ++d) snf[d] = smith_normal_form(boundary_matrix(complex, d));

  result.betti.resize(top);
  result.torsion.resize(top);
  result.acyclic = true;
  for (std::size_t d = 0; d < top; ++d) {
    const std::size_t rank_out = snf[d].size();
    const std::size_t rank_in = snf[d + 1].size();
    result.betti[d] = result.face_counts[d] - rank_out - rank_in;
    for (const auto& v : snf[d + 1]) {
      if (v > 1) result.torsion[d].push_back(v);
    }
    if (result.betti[d] != 0 || !result.torsion[d].empty()) result.acyclic = false;
  }
  result.components = count_components(complex);
  result.connected = result.betti[0] == 0;
  return result;
}

HomologyResult brown_complex_homology(const PermGroup& g, std::uint64_t p, std::size_t cap) {
  return reduced_homology(order_complex(p_subgroup_poset(g, p, cap)));
}

}  // namespace normalp
