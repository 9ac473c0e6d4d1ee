#include "normalp/groupkit.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "normalp/arith.hpp"
#include "normalp/error.hpp"

namespace normalp {
namespace {

std::uint64_t p_part(std::uint64_t order, std::uint64_t p) {
  std::uint64_t part = 1;
  while (order % p == 0) {
    order /= p;
    part *= p;
  }
  return part;
}

bool normalizes(const Permutation& g, const Subgroup& h) {
  const Permutation inv = g.inverse();
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return h.contains(inv * x * g); });
}

std::vector<Permutation> conjugate_elements(const std::vector<Permutation>& elems, const Permutation& g) {
  const Permutation inv = g.inverse();
  std::vector<Permutation> out;
  out.reserve(elems.size());
  for (const auto& x : elems) out.push_back(inv * x * g);
  std::sort(out.begin(), out.end());
  return out;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
}

}  // namespace

Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t target = p_part(g.order(), p);
  if (target == g.order()) return g;
  Subgroup sylow = PermGroup::trivial(g.degree(), g.limits());
  while (sylow.order() < target) {
    std::optional<Permutation> pick;
    g.for_each_element([&](const Permutation& x) {
      if (pick || sylow.contains(x)) return;
      if (!sylow.contains(x.pow(static_cast<std::int64_t>(p)))) return;
      if (normalizes(x, sylow)) pick = x;
    });
    if (!pick) throw InvalidArgument("Sylow climbing stalled");  // impossible by Sylow's theorems
    const Permutation extra[] = {*pick};
    sylow = sylow.with_generators(extra);
  }
  return sylow;
}

Subgroup p_core(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  if (g.order() % p != 0) return PermGroup::trivial(g.degree(), g.limits());
  const Subgroup sylow = sylow_subgroup(g, p);
  if (sylow.order() == g.order()) return g;

  std::vector<Permutation> core = sylow.elements();
  std::set<std::vector<Permutation>> seen{core};
  std::vector<std::vector<Permutation>> queue{core};
  for (std::size_t i = 0; i < queue.size() && core.size() > 1; ++i) {
    for (const auto& x : g.generators()) {
      auto conj = conjugate_elements(queue[i], x);
      if (!seen.insert(conj).second) continue;
      std::vector<Permutation> meet;
      std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(), std::back_inserter(meet));
      core = std::move(meet);
      queue.push_back(std::move(conj));
    }
  }
  return PermGroup::from_elements(g.degree(), core, g.limits());
}

Subgroup normalizer(const PermGroup& g, const Subgroup& h) {
  std::vector<Permutation> members;
  g.for_each_element([&](const Permutation& x) {
    if (normalizes(x, h)) members.push_back(x);
  });
  return PermGroup::from_elements(g.degree(), members, g.limits());
}

Subgroup centralizer(const PermGroup& g, const Subgroup& h) {
  std::vector<Permutation> members;
  g.for_each_element([&](const Permutation& x) {
    const bool commutes = std::all_of(h.generators().begin(), h.generators().end(),
                                      [&](const Permutation& y) { return x * y == y * x; });
    if (commutes) members.push_back(x);
  });
  return PermGroup::from_elements(g.degree(), members, g.limits());
}

Subgroup normal_closure(const PermGroup& g, const Subgroup& h) {
  std::vector<Permutation> queue;
  for (const auto& x : h.generators()) {
    if (!x.is_identity()) queue.push_back(x);
  }
  PermGroup closure(g.degree(), queue, g.limits());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& y : g.generators()) {
      Permutation c = conjugate(queue[i], y);
      if (closure.contains(c)) continue;
      const Permutation extra[] = {c};
      closure = closure.with_generators(extra);
      queue.push_back(std::move(c));
    }
  }
  return closure;
}

bool is_normal(const PermGroup& g, const Subgroup& h) {
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](const Permutation& x) { return normalizes(x, h); });
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool is_p_group(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  return p_part(g.order(), p) == g.order();
}

bool is_elementary_abelian(const PermGroup& g, std::uint64_t p) {
  if (!is_p_group(g, p) || !is_abelian(g)) return false;
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](const Permutation& x) { return x.pow(static_cast<std::int64_t>(p)).is_identity(); });
}

Subgroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(g, PermGroup(g.degree(), std::move(comms), g.limits()));
}

std::vector<Subgroup> derived_series(const PermGroup& g) {
  std::vector<Subgroup> series{g};
  while (!series.back().is_trivial()) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

Subgroup fitting(const PermGroup& g) {
  std::vector<Permutation> gens;
  for (const auto& part : factorize(g.order()).parts) {
    const Subgroup core = p_core(g, part.prime);
    gens.insert(gens.end(), core.generators().begin(), core.generators().end());
  }
  return PermGroup(g.degree(), std::move(gens), g.limits());
}

Subgroup frattini_p(const PermGroup& p_group) {
  const Factorization f = factorize(p_group.order());
  if (f.parts.empty()) return p_group;
  if (f.parts.size() != 1) {
    throw PreconditionFailed("Frattini subgroup requires a p-group; order " +
                             std::to_string(p_group.order()) + " is not a prime power");
  }
  const auto p = static_cast<std::int64_t>(f.parts.front().prime);
  std::vector<Permutation> seeds;
  const auto& gens = p_group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Permutation power = gens[i].pow(p);
    if (!power.is_identity()) seeds.push_back(std::move(power));
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  }
  return normal_closure(p_group, PermGroup(p_group.degree(), std::move(seeds), p_group.limits()));
}

PermGroup quotient_action(const PermGroup& g, const Subgroup& n) {
  const auto& members = n.elements();
  auto key = [&](const Permutation& x) {
    Permutation best = members.front() * x;
    for (std::size_t i = 1; i < members.size(); ++i) best = std::min(best, members[i] * x);
    return best;
  };
  std::map<Permutation, std::size_t> index;
  std::vector<Permutation> reps{Permutation(g.degree())};
  index.emplace(key(reps.front()), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& y : g.generators()) {
      Permutation next = reps[i] * y;
      if (index.emplace(key(next), reps.size()).second) reps.push_back(std::move(next));
    }
  }
  // Renumber cosets by their least element.
  std::vector<std::size_t> rank(reps.size());
  std::size_t r = 0;
  for (auto& [k, i] : index) rank[i] = r++;

  std::vector<Permutation> gens;
  for (const auto& y : g.generators()) {
    std::vector<Point> images(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      images[rank[i]] = static_cast<Point>(rank[index.at(key(reps[i] * y))]);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(reps.size(), std::move(gens), g.limits());
}

bool quotient_p_core_check(const PermGroup& g, std::uint64_t p) {
  const Subgroup core = p_core(g, p);
  return p_core(quotient_action(g, core), p).is_trivial();
}

std::vector<std::vector<Permutation>> p_group_subgroups(const PermGroup& p_group, std::uint64_t p,
                                                        std::size_t cap) {
  if (!is_p_group(p_group, p)) {
    throw PreconditionFailed("subgroup lattice enumeration requires a " + std::to_string(p) + "-group");
  }
  const auto& all = p_group.elements();
  std::set<std::vector<Permutation>> seen;
  std::vector<std::vector<Permutation>> found{{Permutation(p_group.degree())}};
  seen.insert(found.front());
  // Every subgroup K != 1 of a p-group is <M, x> for a maximal subgroup M
  // of K and any x in K \ M, so breadth-first extension reaches all of them.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& x : all) {
      const auto& k = found[i];
      if (std::binary_search(k.begin(), k.end(), x)) continue;
      if (!std::binary_search(k.begin(), k.end(), x.pow(static_cast<std::int64_t>(p)))) continue;
      const Permutation inv = x.inverse();
      const bool normal = std::all_of(k.begin(), k.end(), [&](const Permutation& y) {
        return std::binary_search(k.begin(), k.end(), inv * y * x);
      });
      if (!normal) continue;
      std::vector<Permutation> next = k;
      Permutation power = x;
      for (std::uint64_t e = 1; e < p; ++e) {
        for (const auto& y : k) next.push_back(y * power);
        power = power * x;
      }
      std::sort(next.begin(), next.end());
      if (!seen.insert(next).second) continue;
      if (found.size() >= cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " subgroups");
      }
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

}  // namespace normalp
