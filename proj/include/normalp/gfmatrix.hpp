#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "normalp/arith.hpp"

namespace normalp {

/// Square matrix over the prime field F_q. Entries are kept reduced.
class GFMatrix {
 public:
  GFMatrix() = default;
  /// Zero matrix of dimension t over F_q.
  GFMatrix(std::uint32_t t, std::uint32_t q);
  /// Row-major entries; each is reduced mod q.
  GFMatrix(std::uint32_t t, std::uint32_t q, std::vector<std::uint32_t> entries);

  static GFMatrix identity(std::uint32_t t, std::uint32_t q);

  std::uint32_t dimension() const noexcept { return t_; }
  std::uint32_t modulus() const noexcept { return q_; }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return entries_[row * t_ + col]; }
  void set(std::uint32_t row, std::uint32_t col, std::uint64_t value) {
    entries_[row * t_ + col] = static_cast<std::uint32_t>(value % q_);
  }
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }

  bool is_identity() const noexcept;

  /// y = A x for a column vector over F_q.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> x) const;

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;
  friend auto operator<=>(const GFMatrix& a, const GFMatrix& b) {
    if (auto c = a.t_ <=> b.t_; c != 0) return c;
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  std::uint32_t t_ = 0;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> entries_;
};

struct GFMatrixHash {
  std::size_t operator()(const GFMatrix& a) const noexcept;
};

GFMatrix mat_mul(const GFMatrix& a, const GFMatrix& b);
GFMatrix mat_pow(const GFMatrix& a, std::uint64_t exponent);
std::uint32_t determinant(const GFMatrix& a);
std::size_t rank(const GFMatrix& a);
/// Throws SingularMatrix when det(a) = 0.
GFMatrix mat_inverse(const GFMatrix& a);
/// Least k >= 1 with a^k = I. Throws SingularMatrix when det(a) = 0.
std::uint64_t matrix_order(const GFMatrix& a);

/// |GL(t, q)| = q^(t(t-1)/2) * gamma(t, q).
BigNat gl_order(std::uint32_t t, std::uint64_t q);

/// Every invertible t x t matrix over F_q, lexicographic on row-major
/// entries. Throws CapExceeded when |GL(t, q)| > cap.
std::vector<GFMatrix> enumerate_gl(std::uint32_t t, std::uint32_t q, std::uint64_t cap);

/// Companion matrix of a primitive polynomial of degree d over F_q: a
/// generator of the multiplicative group of F_{q^d} acting on F_q^d.
GFMatrix singer_cycle(std::uint32_t d, std::uint32_t q);

/// Generators of a Sylow p-subgroup of GL(t, q), p != q, built from the
/// Singer-cycle p-part (or the semidihedral 2-group of GL(2, q) when
/// q = 3 mod 4) wreathed with a Sylow p-subgroup of the symmetric group
/// permuting diagonal blocks. Empty when p does not divide |GL(t, q)|.
std::vector<GFMatrix> sylow_gl_structured(std::uint32_t t, std::uint32_t q, std::uint64_t p);

/// Generators of a Sylow p-subgroup of GL(t, q) found by climbing inside
/// the enumerated group: start from the trivial subgroup and repeatedly
/// adjoin the least element of the normalizer whose p-th power lies in the
/// current subgroup. Throws CapExceeded when |GL(t, q)| > cap.
std::vector<GFMatrix> sylow_gl_by_climbing(std::uint32_t t, std::uint32_t q, std::uint64_t p,
                                           std::uint64_t cap);

/// All elements of the group generated by gens (closure). Throws
/// CapExceeded when the closure outgrows cap.
std::vector<GFMatrix> matrix_group_elements(std::span<const GFMatrix> gens, std::uint32_t t,
                                            std::uint32_t q, std::uint64_t cap);

/// Generators of a Sylow p-subgroup of the symmetric group on r points,
/// as image arrays: iterated wreath products of p-cycles on the base-p
/// digits of r.
std::vector<std::vector<std::uint32_t>> symmetric_sylow_generators(std::uint32_t r,
                                                                   std::uint64_t p);

}  // namespace normalp
