#pragma once

// Argument-graph data model: statements, premises, arguments, and the
// acyclic bipartite graph that ties them together. Graphs are assembled
// through GraphBuilder and are immutable values afterwards.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/errors.hpp"

namespace arguendo {

struct StatementId {
  std::string value;
  auto operator<=>(const StatementId&) const = default;
};

struct ArgumentId {
  std::string value;
  auto operator<=>(const ArgumentId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const StatementId& id) { return os << id.value; }
inline std::ostream& operator<<(std::ostream& os, const ArgumentId& id) { return os << id.value; }

// Premise roles: an ordinary premise must hold, an assumption holds until
// challenged, an exception blocks the argument when it holds.
enum class PremiseKind { ordinary, assumption, exception };

enum class Direction { pro, con };

inline const char* to_string(PremiseKind kind) {
  switch (kind) {
    case PremiseKind::ordinary: return "ordinary";
    case PremiseKind::assumption: return "assumption";
    case PremiseKind::exception: return "exception";
  }
  return "?";
}

inline const char* to_string(Direction direction) {
  return direction == Direction::pro ? "pro" : "con";
}

// Argument strength in [0, 1]; construction rejects anything outside.
class Weight {
 public:
  Weight() = default;  // neutral midpoint
  explicit Weight(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0))
      raise(Errc::domain_error, "weight " + std::to_string(value) + " outside [0, 1]");
  }

  double value() const noexcept { return value_; }
  auto operator<=>(const Weight&) const = default;

 private:
  double value_ = 0.5;
};

struct Premise {
  StatementId statement;
  PremiseKind kind = PremiseKind::ordinary;
  auto operator<=>(const Premise&) const = default;
};

struct Statement {
  StatementId id;
  std::string text;
  std::optional<StatementId> complement;  // symmetric, irreflexive link
  bool operator==(const Statement&) const = default;
};

class Argument {
 public:
  Argument(ArgumentId id, StatementId conclusion, Direction direction,
           std::set<Premise> premises, Weight weight)
      : id_(std::move(id)),
        conclusion_(std::move(conclusion)),
        direction_(direction),
        premises_(std::move(premises)),
        weight_(weight) {}

  const ArgumentId& id() const noexcept { return id_; }
  const StatementId& conclusion() const noexcept { return conclusion_; }
  Direction direction() const noexcept { return direction_; }
  const std::set<Premise>& premises() const noexcept { return premises_; }
  Weight weight() const noexcept { return weight_; }

  bool operator==(const Argument& other) const = default;

 private:
  ArgumentId id_;
  StatementId conclusion_;
  Direction direction_;
  std::set<Premise> premises_;
  Weight weight_;
};

enum class ViolationKind { cycle, complement_duplication, dangling_reference };
enum class WarningKind { empty_text };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationWarning {
  WarningKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<ValidationWarning> warnings;
  bool ok() const noexcept { return violations.empty(); }
};

// A node in the bipartite graph, for orderings and exports.
struct NodeRef {
  enum class Kind { statement, argument };
  Kind kind;
  std::string id;
  auto operator<=>(const NodeRef&) const = default;
};

class GraphBuilder;

class ArgumentGraph {
 public:
  ArgumentGraph() = default;

  const std::map<StatementId, Statement>& statements() const noexcept { return statements_; }
  const std::map<ArgumentId, Argument>& arguments() const noexcept { return arguments_; }

  bool has_statement(const StatementId& id) const { return statements_.count(id) != 0; }
  bool has_argument(const ArgumentId& id) const { return arguments_.count(id) != 0; }

  const Statement& statement(const StatementId& id) const {
    auto it = statements_.find(id);
    if (it == statements_.end()) raise(Errc::unknown_statement, "no statement '" + id.value + "'");
    return it->second;
  }

  const Argument& argument(const ArgumentId& id) const {
    auto it = arguments_.find(id);
    if (it == arguments_.end()) raise(Errc::unknown_argument, "no argument '" + id.value + "'");
    return it->second;
  }

  std::optional<StatementId> complement_of(const StatementId& id) const {
    return statement(id).complement;
  }

  // Arguments concluding s, in id order.
  std::vector<ArgumentId> arguments_for(const StatementId& s) const {
    std::vector<ArgumentId> out;
    for (const auto& [id, arg] : arguments_)
      if (arg.conclusion() == s) out.push_back(id);
    return out;
  }

  bool operator==(const ArgumentGraph& other) const = default;

 private:
  friend class GraphBuilder;
  std::map<StatementId, Statement> statements_;
  std::map<ArgumentId, Argument> arguments_;
};

// Single-writer construction phase. Every mutator preserves the graph
// invariants, so a builder snapshot always validates clean.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(ArgumentGraph seed) : graph_(std::move(seed)) {}

  StatementId add_statement(std::string text) {
    return add_statement(fresh_id("s", graph_.statements_), std::move(text));
  }

  StatementId add_statement(StatementId id, std::string text) {
    if (graph_.statements_.count(id))
      raise(Errc::duplicate_id, "statement '" + id.value + "' already exists");
    graph_.statements_.emplace(id, Statement{id, std::move(text), std::nullopt});
    return id;
  }

  void link_complement(const StatementId& a, const StatementId& b) {
    if (a == b) raise(Errc::self_complement, "statement '" + a.value + "' cannot complement itself");
    Statement& sa = mutable_statement(a);
    Statement& sb = mutable_statement(b);
    if (sa.complement)
      raise(Errc::already_linked, "statement '" + a.value + "' already has a complement");
    if (sb.complement)
      raise(Errc::already_linked, "statement '" + b.value + "' already has a complement");
    sa.complement = b;
    sb.complement = a;
  }

  ArgumentId add_argument(const StatementId& conclusion, Direction direction,
                          const std::vector<Premise>& premises, Weight weight = Weight()) {
    return add_argument(fresh_id("a", graph_.arguments_), conclusion, direction, premises, weight);
  }

  ArgumentId add_argument(ArgumentId id, const StatementId& conclusion, Direction direction,
                          const std::vector<Premise>& premises, Weight weight = Weight()) {
    if (graph_.arguments_.count(id))
      raise(Errc::duplicate_id, "argument '" + id.value + "' already exists");
    if (!graph_.has_statement(conclusion))
      raise(Errc::unknown_statement, "conclusion '" + conclusion.value + "' not in graph");
    std::set<Premise> premise_set;
    for (const Premise& p : premises) {
      if (!graph_.has_statement(p.statement))
        raise(Errc::unknown_statement, "premise '" + p.statement.value + "' not in graph");
      if (!premise_set.insert(p).second)
        raise(Errc::duplicate_premise,
              "premise (" + p.statement.value + ", " + to_string(p.kind) + ") repeated");
    }
    if (would_cycle(conclusion, premise_set))
      raise(Errc::cycle_introduced,
            "argument '" + id.value + "' would close a directed cycle");
    graph_.arguments_.emplace(
        id, Argument(id, conclusion, direction, std::move(premise_set), weight));
    return id;
  }

  // Read-only view of the graph under construction.
  const ArgumentGraph& graph() const noexcept { return graph_; }

  // Immutable snapshot.
  ArgumentGraph build() const { return graph_; }

 private:
  Statement& mutable_statement(const StatementId& id) {
    auto it = graph_.statements_.find(id);
    if (it == graph_.statements_.end())
      raise(Errc::unknown_statement, "no statement '" + id.value + "'");
    return it->second;
  }

  template <typename Map>
  static std::string next_token(const char* prefix, const Map& taken, std::size_t& counter) {
    std::string candidate;
    do {
      candidate = std::string(prefix) + std::to_string(++counter);
    } while (taken.count({candidate}) != 0);
    return candidate;
  }

  StatementId fresh_id(const char* prefix, const std::map<StatementId, Statement>& taken) {
    return StatementId{next_token(prefix, taken, statement_counter_)};
  }

  ArgumentId fresh_id(const char* prefix, const std::map<ArgumentId, Argument>& taken) {
    return ArgumentId{next_token(prefix, taken, argument_counter_)};
  }

  // A new argument adds edges p -> arg -> conclusion; since the argument node
  // is fresh, a cycle appears iff some premise is already reachable from the
  // conclusion (or is the conclusion itself).
  bool would_cycle(const StatementId& conclusion, const std::set<Premise>& premises) const {
    std::set<StatementId> targets;
    for (const Premise& p : premises) targets.insert(p.statement);
    if (targets.empty()) return false;
    if (targets.count(conclusion)) return true;
    std::set<StatementId> seen{conclusion};
    std::vector<StatementId> frontier{conclusion};
    while (!frontier.empty()) {
      StatementId current = frontier.back();
      frontier.pop_back();
      for (const auto& [id, arg] : graph_.arguments_) {
        bool uses_current = false;
        for (const Premise& p : arg.premises())
          if (p.statement == current) { uses_current = true; break; }
        if (!uses_current) continue;
        const StatementId& next = arg.conclusion();
        if (targets.count(next)) return true;
        if (seen.insert(next).second) frontier.push_back(next);
      }
    }
    return false;
  }

  ArgumentGraph graph_;
  std::size_t statement_counter_ = 0;
  std::size_t argument_counter_ = 0;
};

namespace detail {

// Edge lists of the induced digraph: premise -> argument, argument -> conclusion.
inline std::map<NodeRef, std::vector<NodeRef>> adjacency(const ArgumentGraph& graph) {
  std::map<NodeRef, std::vector<NodeRef>> out;
  for (const auto& [sid, st] : graph.statements())
    out.try_emplace(NodeRef{NodeRef::Kind::statement, sid.value});
  for (const auto& [aid, arg] : graph.arguments()) {
    NodeRef argument_node{NodeRef::Kind::argument, aid.value};
    out.try_emplace(argument_node);
    for (const Premise& p : arg.premises())
      out[NodeRef{NodeRef::Kind::statement, p.statement.value}].push_back(argument_node);
    out[argument_node].push_back(NodeRef{NodeRef::Kind::statement, arg.conclusion().value});
  }
  return out;
}

}  // namespace detail

inline ValidationReport validate(const ArgumentGraph& graph) {
  ValidationReport report;

  // Dangling references.
  for (const auto& [aid, arg] : graph.arguments()) {
    if (!graph.has_statement(arg.conclusion()))
      report.violations.push_back({ViolationKind::dangling_reference,
                                   "argument '" + aid.value + "' concludes missing statement '" +
                                       arg.conclusion().value + "'"});
    for (const Premise& p : arg.premises())
      if (!graph.has_statement(p.statement))
        report.violations.push_back({ViolationKind::dangling_reference,
                                     "argument '" + aid.value + "' uses missing statement '" +
                                         p.statement.value + "'"});
  }
  for (const auto& [sid, st] : graph.statements()) {
    if (st.complement && !graph.has_statement(*st.complement))
      report.violations.push_back({ViolationKind::dangling_reference,
                                   "statement '" + sid.value + "' complements missing statement '" +
                                       st.complement->value + "'"});
  }

  // Complement linkage must be a fixed-point-free involution, and at most one
  // node pair may stand for a given sentence/negation pair.
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> pairs_by_text;
  for (const auto& [sid, st] : graph.statements()) {
    if (!st.complement || !graph.has_statement(*st.complement)) continue;
    const Statement& partner = graph.statement(*st.complement);
    if (*st.complement == sid || !partner.complement || *partner.complement != sid) {
      report.violations.push_back({ViolationKind::complement_duplication,
                                   "complement link on '" + sid.value + "' is not symmetric"});
      continue;
    }
    if (sid < *st.complement) {  // visit each pair once
      auto key = std::minmax(st.text, partner.text);
      pairs_by_text[{key.first, key.second}].push_back(sid.value);
    }
  }
  for (const auto& [texts, members] : pairs_by_text) {
    if (members.size() > 1) {
      std::string detail = "statement pairs";
      for (const std::string& m : members) detail += " '" + m + "'";
      detail += " all claim the complement pair for \"" + texts.first + "\"";
      report.violations.push_back({ViolationKind::complement_duplication, detail});
    }
  }

  // Independent cycle check over the induced edges (iterative three-color DFS).
  {
    auto adj = detail::adjacency(graph);
    std::map<NodeRef, int> color;  // 0 white, 1 gray, 2 black
    for (const auto& [start, _] : adj) {
      if (color[start] != 0) continue;
      std::vector<std::pair<NodeRef, std::size_t>> stack{{start, 0}};
      color[start] = 1;
      while (!stack.empty()) {
        auto& [node, next_index] = stack.back();
        const auto& successors = adj[node];
        if (next_index < successors.size()) {
          NodeRef successor = successors[next_index++];
          if (color[successor] == 1) {
            report.violations.push_back(
                {ViolationKind::cycle, "directed cycle through '" + successor.id + "'"});
            color[successor] = 2;  // report each cycle entry once
          } else if (color[successor] == 0) {
            color[successor] = 1;
            stack.push_back({successor, 0});
          }
        } else {
          color[node] = 2;
          stack.pop_back();
        }
      }
    }
  }

  for (const auto& [sid, st] : graph.statements())
    if (st.text.empty())
      report.warnings.push_back({WarningKind::empty_text, "statement '" + sid.value + "' has empty text"});

  return report;
}

// Kahn's algorithm with an ordered ready set, so the result is canonical:
// every edge source precedes its target, ties resolve by (kind, id).
inline std::vector<NodeRef> topological_order(const ArgumentGraph& graph) {
  auto adj = detail::adjacency(graph);
  std::map<NodeRef, std::size_t> indegree;
  for (const auto& [node, succs] : adj) {
    indegree.try_emplace(node, 0);
    for (const NodeRef& succ : succs) ++indegree[succ];
  }
  std::set<NodeRef> ready;
  for (const auto& [node, degree] : indegree)
    if (degree == 0) ready.insert(node);

  std::vector<NodeRef> order;
  while (!ready.empty()) {
    NodeRef node = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(node);
    for (const NodeRef& succ : adj[node])
      if (--indegree[succ] == 0) ready.insert(succ);
  }
  if (order.size() != indegree.size())
    raise(Errc::cyclic_graph, "graph contains a directed cycle");
  return order;
}

}  // namespace arguendo
