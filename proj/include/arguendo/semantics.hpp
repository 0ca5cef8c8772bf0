#pragma once

// Abstract argumentation: a framework is a set of arguments plus an attack
// relation; extension semantics ignore argument structure entirely.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/errors.hpp"
#include "arguendo/graph.hpp"

namespace arguendo {

using ArgumentSet = std::set<ArgumentId>;
using Attack = std::pair<ArgumentId, ArgumentId>;

class AbstractFramework {
 public:
  AbstractFramework() = default;
  AbstractFramework(ArgumentSet arguments, std::set<Attack> attacks)
      : arguments_(std::move(arguments)) {
    for (const Attack& at : attacks) add_attack(at.first, at.second);
  }

  void add_argument(ArgumentId id) { arguments_.insert(std::move(id)); }

  void add_attack(const ArgumentId& attacker, const ArgumentId& target) {
    if (!arguments_.count(attacker))
      raise(Errc::foreign_argument, "attacker '" + attacker.value + "' not in framework");
    if (!arguments_.count(target))
      raise(Errc::foreign_argument, "target '" + target.value + "' not in framework");
    attacks_.insert({attacker, target});
  }

  const ArgumentSet& arguments() const noexcept { return arguments_; }
  const std::set<Attack>& attacks() const noexcept { return attacks_; }

  bool attacks(const ArgumentId& attacker, const ArgumentId& target) const {
    return attacks_.count({attacker, target}) != 0;
  }

 private:
  ArgumentSet arguments_;
  std::set<Attack> attacks_;
};

namespace detail {

inline void require_members(const AbstractFramework& af, const ArgumentSet& set) {
  for (const ArgumentId& member : set)
    if (!af.arguments().count(member))
      raise(Errc::foreign_argument, "argument '" + member.value + "' not in framework");
}

}  // namespace detail

// No two members of the set attack each other.
inline bool is_conflict_free(const AbstractFramework& af, const ArgumentSet& set) {
  detail::require_members(af, set);
  for (const ArgumentId& a : set)
    for (const ArgumentId& b : set)
      if (af.attacks(a, b)) return false;
  return true;
}

// Every attacker of x is counter-attacked by some member of the set.
inline bool defends(const AbstractFramework& af, const ArgumentSet& set, const ArgumentId& x) {
  detail::require_members(af, set);
  if (!af.arguments().count(x))
    raise(Errc::foreign_argument, "argument '" + x.value + "' not in framework");
  for (const ArgumentId& attacker : af.arguments()) {
    if (!af.attacks(attacker, x)) continue;
    bool countered = false;
    for (const ArgumentId& defender : set)
      if (af.attacks(defender, attacker)) { countered = true; break; }
    if (!countered) return false;
  }
  return true;
}

inline bool is_admissible(const AbstractFramework& af, const ArgumentSet& set) {
  if (!is_conflict_free(af, set)) return false;
  for (const ArgumentId& member : set)
    if (!defends(af, set, member)) return false;
  return true;
}

// All subset-maximal admissible sets. Exhaustive include/exclude search with
// conflict pruning; disputes at desk scale keep frameworks small. Never empty,
// since the empty set is admissible.
inline std::set<ArgumentSet> preferred_extensions(const AbstractFramework& af) {
  std::vector<ArgumentId> order(af.arguments().begin(), af.arguments().end());
  std::vector<ArgumentSet> admissible;

  ArgumentSet current;
  auto search = [&](auto&& self, std::size_t index) -> void {
    if (index == order.size()) {
      if (is_admissible(af, current)) admissible.push_back(current);
      return;
    }
    const ArgumentId& candidate = order[index];
    bool conflicts = af.attacks(candidate, candidate);
    for (const ArgumentId& member : current) {
      if (af.attacks(member, candidate) || af.attacks(candidate, member)) {
        conflicts = true;
        break;
      }
    }
    if (!conflicts) {
      current.insert(candidate);
      self(self, index + 1);
      current.erase(candidate);
    }
    self(self, index + 1);
  };
  search(search, 0);

  std::set<ArgumentSet> preferred;
  for (const ArgumentSet& candidate : admissible) {
    bool maximal = true;
    for (const ArgumentSet& other : admissible) {
      if (other.size() <= candidate.size()) continue;
      if (std::includes(other.begin(), other.end(), candidate.begin(), candidate.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) preferred.insert(candidate);
  }
  return preferred;
}

// Least fixed point of F(B) = { x | B defends x }, starting from the empty set.
inline ArgumentSet grounded_extension(const AbstractFramework& af) {
  ArgumentSet current;
  for (;;) {
    ArgumentSet next;
    for (const ArgumentId& x : af.arguments())
      if (defends(af, current, x)) next.insert(x);
    if (next == current) return current;
    current = std::move(next);
  }
}

// Lift an argument graph to its abstract framework. An attack exists when the
// attacker's conclusion negates a premise of the target (undermining), when
// both argue the same conclusion in opposite directions (rebuttal), or when
// they argue complementary conclusions in the same direction.
inline AbstractFramework derive_af(const ArgumentGraph& graph) {
  if (!validate(graph).ok())
    raise(Errc::invalid_graph, "cannot derive a framework from an ill-formed graph");

  AbstractFramework af;
  for (const auto& [id, _] : graph.arguments()) af.add_argument(id);

  for (const auto& [aid, a] : graph.arguments()) {
    std::optional<StatementId> negated = graph.complement_of(a.conclusion());
    for (const auto& [bid, b] : graph.arguments()) {
      bool attack = false;
      if (negated) {
        for (const Premise& p : b.premises())
          if (p.statement == *negated) { attack = true; break; }
      }
      if (!attack && a.conclusion() == b.conclusion() && a.direction() != b.direction())
        attack = true;
      if (!attack && negated && *negated == b.conclusion() && a.direction() == b.direction())
        attack = true;
      if (attack) af.add_attack(aid, bid);
    }
  }
  return af;
}

}  // namespace arguendo
