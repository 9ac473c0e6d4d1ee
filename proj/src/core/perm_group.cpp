#include "normalp/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <utility>

#include "normalp/error.hpp"

namespace normalp {
namespace detail {

struct Level {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<std::int32_t> rep_index;  // point -> index into reps, -1 outside the orbit
  std::vector<Permutation> reps;        // reps[i] maps base to orbit[i]
  std::vector<Permutation> rep_inverses;
};

struct GroupState {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  GroupLimits limits;
  std::vector<Level> chain;
  std::uint64_t order = 1;

  std::once_flag table_once;
  std::vector<Permutation> table;

  void rebuild_orbit(Level& level) const {
    level.orbit.assign(1, level.base);
    level.rep_index.assign(degree, -1);
    level.reps.assign(1, Permutation(degree));
    level.rep_index[level.base] = 0;
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
      const Point beta = level.orbit[i];
      for (const auto& s : level.gens) {
        const Point gamma = s(beta);
        if (level.rep_index[gamma] >= 0) continue;
        level.rep_index[gamma] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(gamma);
        level.reps.push_back(level.reps[i] * s);
      }
    }
    level.rep_inverses.clear();
    level.rep_inverses.reserve(level.reps.size());
    for (const auto& u : level.reps) level.rep_inverses.push_back(u.inverse());
  }

  // Sifts g through levels first..end; returns the residue and the level
  // where sifting stopped (chain.size() when it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t first) const {
    for (std::size_t j = first; j < chain.size(); ++j) {
      const Point beta = g(chain[j].base);
      const std::int32_t idx = chain[j].rep_index[beta];
      if (idx < 0) return {std::move(g), j};
      g = g * chain[j].rep_inverses[static_cast<std::size_t>(idx)];
    }
    return {std::move(g), chain.size()};
  }

  void check_cap() const {
    unsigned __int128 product = 1;
    for (const auto& level : chain) {
      product *= level.orbit.size();
      if (product > limits.order_cap) {
        throw CapExceeded("group order exceeds cap " + std::to_string(limits.order_cap));
      }
    }
  }

  void schreier_sims(std::span<const Point> prefix) {
    for (Point b : prefix) {
      if (b >= degree) throw InvalidArgument("base point out of range");
      if (std::any_of(chain.begin(), chain.end(), [&](const Level& l) { return l.base == b; })) continue;
      chain.push_back(Level{b, {}, {}, {}, {}, {}});
    }
    std::vector<Permutation> nontrivial;
    for (const auto& g : generators) {
      if (!g.is_identity()) nontrivial.push_back(g);
    }
    for (const auto& g : nontrivial) {
      const bool moves_base =
          std::any_of(chain.begin(), chain.end(), [&](const Level& l) { return g(l.base) != l.base; });
      if (!moves_base) chain.push_back(Level{g.first_moved(), {}, {}, {}, {}, {}});
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (const auto& g : nontrivial) {
        bool fixes = true;
        for (std::size_t j = 0; j < i && fixes; ++j) fixes = g(chain[j].base) == chain[j].base;
        if (fixes) chain[i].gens.push_back(g);
      }
      rebuild_orbit(chain[i]);
    }
    check_cap();

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.size()) - 1;
    while (i >= 0) {
      const auto li = static_cast<std::size_t>(i);
      bool extended = false;
      for (std::size_t b = 0; b < chain[li].orbit.size() && !extended; ++b) {
        for (std::size_t k = 0; k < chain[li].gens.size() && !extended; ++k) {
          const Level& level = chain[li];
          const Permutation& s = level.gens[k];
          const Point image = s(level.orbit[b]);
          const auto idx = static_cast<std::size_t>(level.rep_index[image]);
          Permutation schreier = level.reps[b] * s * level.rep_inverses[idx];
          auto [residue, j] = strip(std::move(schreier), li + 1);
          if (residue.is_identity()) continue;
          if (j == chain.size()) chain.push_back(Level{residue.first_moved(), {}, {}, {}, {}, {}});
          for (std::size_t l = li + 1; l <= j; ++l) {
            chain[l].gens.push_back(residue);
            rebuild_orbit(chain[l]);
          }
          check_cap();
          i = static_cast<std::ptrdiff_t>(j);
          extended = true;
        }
      }
      if (!extended) --i;
    }
    order = 1;
    for (const auto& level : chain) order *= level.orbit.size();
  }

  void visit(std::size_t level, const Permutation& acc,
             const std::function<void(const Permutation&)>& fn) const {
    if (level == 0) {
      fn(acc);
      return;
    }
    for (const auto& u : chain[level - 1].reps) visit(level - 1, acc * u, fn);
  }
};

}  // namespace detail

PermGroup::PermGroup(std::shared_ptr<detail::GroupState> state) : state_(std::move(state)) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, GroupLimits limits,
                     std::span<const Point> base_prefix) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator of degree " + std::to_string(g.degree()) +
                            " in a group of degree " + std::to_string(degree));
    }
  }
  auto state = std::make_shared<detail::GroupState>();
  state->degree = degree;
  state->generators = std::move(generators);
  state->limits = limits;
  state->schreier_sims(base_prefix);
  state_ = std::move(state);
}

PermGroup PermGroup::trivial(std::size_t degree, GroupLimits limits) { return PermGroup(degree, {}, limits); }

PermGroup PermGroup::from_elements(std::size_t degree, std::span<const Permutation> elements,
                                   GroupLimits limits) {
  PermGroup group = trivial(degree, limits);
  std::vector<Permutation> gens;
  for (const auto& e : elements) {
    if (group.contains(e)) continue;
    gens.push_back(e);
    group = PermGroup(degree, gens, limits);
  }
  return group;
}

std::size_t PermGroup::degree() const noexcept { return state_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return state_->generators; }
const GroupLimits& PermGroup::limits() const noexcept { return state_->limits; }
std::uint64_t PermGroup::order() const noexcept { return state_->order; }

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != state_->degree) return false;
  auto [residue, level] = state_->strip(g, 0);
  return level == state_->chain.size() && residue.is_identity();
}

bool PermGroup::contains(const PermGroup& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Permutation& g) { return contains(g); });
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (state_->order > state_->limits.table_cap) {
    throw CapExceeded("element table for a group of order " + std::to_string(state_->order) +
                      " exceeds table cap " + std::to_string(state_->limits.table_cap));
  }
  std::call_once(state_->table_once, [this] {
    auto& table = state_->table;
    table.reserve(state_->order);
    state_->visit(state_->chain.size(), Permutation(state_->degree),
                  [&](const Permutation& g) { table.push_back(g); });
    std::sort(table.begin(), table.end());
  });
  return state_->table;
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  if (state_->order <= state_->limits.table_cap) {
    for (const auto& g : elements()) visit(g);
    return;
  }
  state_->visit(state_->chain.size(), Permutation(state_->degree), visit);
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& level : state_->chain) out.push_back(level.base);
  return out;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= state_->degree) throw InvalidArgument("point out of range");
  std::vector<Point> out{x};
  std::vector<bool> seen(state_->degree, false);
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : state_->generators) {
      const Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const {
  return state_->degree <= 1 || orbit(0).size() == state_->degree;
}

PermGroup PermGroup::point_stabilizer(Point x) const {
  const Point prefix[] = {x};
  PermGroup rebased(state_->degree, state_->generators, state_->limits, prefix);
  const auto& chain = rebased.state_->chain;
  if (chain.size() < 2) return trivial(state_->degree, state_->limits);
  return PermGroup(state_->degree, chain[1].gens, state_->limits);
}

PermGroup PermGroup::with_generators(std::span<const Permutation> extra) const {
  std::vector<Permutation> gens = state_->generators;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup(state_->degree, std::move(gens), state_->limits);
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b);
}

}  // namespace normalp
