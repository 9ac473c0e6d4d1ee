#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace normalp {

using Point = std::uint32_t;

/// Bijection of {0, ..., degree - 1}. Products compose left to right:
/// (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws InvalidArgument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Cycles are lists of points; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;
  std::uint64_t order() const;
  /// First point moved, or degree() for the identity.
  Point first_moved() const noexcept;

  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// g^-1 h g.
Permutation conjugate(const Permutation& h, const Permutation& g);
/// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace normalp
