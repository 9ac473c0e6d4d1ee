#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "normalp/permutation.hpp"

namespace normalp {

/// Size limits shared by every group computation. Groups above
/// order_cap are rejected at construction; element tables (and the
/// exhaustive algorithms built on them) exist only up to table_cap.
struct GroupLimits {
  std::uint64_t order_cap = 1'000'000;
  std::uint64_t table_cap = 100'000;
};

namespace detail {
struct GroupState;
}

/// Finite permutation group given by generators. Order and membership
/// come from a deterministic Schreier-Sims stabilizer chain; the sorted
/// element table is built on first use for groups within table_cap.
///
/// Values are immutable and cheap to copy; copies share state.
class PermGroup {
 public:
  /// Throws InvalidArgument on degree mismatch and CapExceeded when the
  /// order passes limits.order_cap. Base points in base_prefix come first
  /// in the stabilizer chain.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, GroupLimits limits = {},
            std::span<const Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree, GroupLimits limits = {});

  /// Group generated by a list of elements known to form a subgroup.
  /// Generators are picked greedily in the given order, skipping any
  /// element already generated.
  static PermGroup from_elements(std::size_t degree, std::span<const Permutation> elements,
                                 GroupLimits limits = {});

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const GroupLimits& limits() const noexcept;
  std::uint64_t order() const noexcept;
  bool is_trivial() const noexcept { return order() == 1; }

  bool contains(const Permutation& g) const;
  /// Every generator of other lies in this group.
  bool contains(const PermGroup& other) const;

  /// Sorted element list. Throws CapExceeded above limits.table_cap.
  const std::vector<Permutation>& elements() const;
  /// Visits every element: in sorted order when the table exists,
  /// otherwise in stabilizer-chain order.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

  std::vector<Point> base() const;
  std::vector<Point> orbit(Point x) const;
  bool is_transitive() const;
  PermGroup point_stabilizer(Point x) const;

  /// Same degree with one more set of generators.
  PermGroup with_generators(std::span<const Permutation> extra) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  explicit PermGroup(std::shared_ptr<detail::GroupState> state);
  std::shared_ptr<detail::GroupState> state_;
};

}  // namespace normalp
