#pragma once

// Statement acceptability over an argument graph, relative to an audience and
// a proof standard. Evaluation is one topological sweep: premises settle
// before the arguments that use them, arguments before their conclusions.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/errors.hpp"
#include "arguendo/graph.hpp"

namespace arguendo {

enum class StatementStatus { accepted, rejected, undecided };

inline const char* to_string(StatementStatus status) {
  switch (status) {
    case StatementStatus::accepted: return "accepted";
    case StatementStatus::rejected: return "rejected";
    case StatementStatus::undecided: return "undecided";
  }
  return "?";
}

// Scintilla accepts on any applicable pro argument; preponderance weighs the
// strongest applicable pro against the strongest applicable con.
enum class ProofStandard { scintilla, preponderance };

struct Audience {
  std::set<StatementId> accepted;
  std::set<StatementId> rejected;
  bool operator==(const Audience&) const = default;
};

struct Labeling {
  std::map<StatementId, StatementStatus> statement_status;
  std::map<ArgumentId, bool> argument_applicable;
  bool operator==(const Labeling&) const = default;
};

namespace detail {

inline bool premise_holds(PremiseKind kind, StatementStatus status) {
  switch (kind) {
    case PremiseKind::ordinary: return status == StatementStatus::accepted;
    case PremiseKind::assumption:
      return status == StatementStatus::accepted || status == StatementStatus::undecided;
    case PremiseKind::exception: return status != StatementStatus::accepted;
  }
  return false;
}

inline StatementStatus opposite(StatementStatus status) {
  return status == StatementStatus::accepted ? StatementStatus::rejected
                                             : StatementStatus::accepted;
}

inline StatementStatus aggregate(ProofStandard standard,
                                 bool has_pro, double max_pro,
                                 bool has_con, double max_con) {
  if (standard == ProofStandard::scintilla) {
    if (has_pro) return StatementStatus::accepted;
    if (has_con) return StatementStatus::rejected;
    return StatementStatus::undecided;
  }
  if (has_pro && (!has_con || max_pro > max_con)) return StatementStatus::accepted;
  if (has_con && (!has_pro || max_con > max_pro)) return StatementStatus::rejected;
  return StatementStatus::undecided;
}

// Evaluation order: the real edges, plus gating edges that make every
// consumer of a statement wait for the decision of the statement's
// complement, so that deciding s can still reject ¬s before anyone reads ¬s.
// Falls back to the plain topological order when the gating edges would close
// a cycle (a statement feeding an argument chain against its own complement).
inline std::vector<NodeRef> evaluation_order(const ArgumentGraph& graph, bool& gated) {
  auto adj = adjacency(graph);
  for (const auto& [sid, st] : graph.statements()) {
    if (!st.complement || !graph.has_statement(*st.complement)) continue;
    NodeRef partner{NodeRef::Kind::statement, st.complement->value};
    for (const auto& [aid, arg] : graph.arguments())
      for (const Premise& p : arg.premises())
        if (p.statement == sid)
          adj[partner].push_back(NodeRef{NodeRef::Kind::argument, aid.value});
  }

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
  gated = order.size() == indegree.size();
  return gated ? order : topological_order(graph);
}

}  // namespace detail

// True iff every ordinary premise is accepted, every assumption is accepted
// or undecided, and no exception premise is accepted.
inline bool is_applicable(const ArgumentGraph& graph, const Labeling& labeling,
                          const ArgumentId& id) {
  const Argument& arg = graph.argument(id);
  for (const Premise& p : arg.premises()) {
    auto it = labeling.statement_status.find(p.statement);
    if (it == labeling.statement_status.end())
      raise(Errc::unresolved_premise,
            "premise '" + p.statement.value + "' of argument '" + id.value + "' has no status");
    if (!detail::premise_holds(p.kind, it->second)) return false;
  }
  return true;
}

inline Labeling evaluate(const ArgumentGraph& graph, const Audience& audience,
                         ProofStandard standard = ProofStandard::preponderance) {
  if (!validate(graph).ok())
    raise(Errc::invalid_graph, "evaluation requires a well-formed graph");

  for (const StatementId& s : audience.accepted)
    if (audience.rejected.count(s))
      raise(Errc::incoherent_audience, "statement '" + s.value + "' both accepted and rejected");
  for (const StatementId& s : audience.accepted) {
    if (!graph.has_statement(s)) continue;
    auto partner = graph.complement_of(s);
    if (partner && audience.accepted.count(*partner))
      raise(Errc::incoherent_audience,
            "complement pair '" + s.value + "'/'" + partner->value + "' both accepted");
  }
  for (const StatementId& s : audience.rejected) {
    if (!graph.has_statement(s)) continue;
    auto partner = graph.complement_of(s);
    if (partner && audience.rejected.count(*partner))
      raise(Errc::incoherent_audience,
            "complement pair '" + s.value + "'/'" + partner->value + "' both rejected");
  }

  Labeling labeling;
  std::set<StatementId> locked;    // status is final
  std::set<StatementId> consumed;  // some argument already read the statement
  for (const auto& [sid, _] : graph.statements())
    labeling.statement_status[sid] = StatementStatus::undecided;

  auto decide = [&](const StatementId& s, StatementStatus status, bool gated) {
    labeling.statement_status[s] = status;
    locked.insert(s);
    auto partner = graph.complement_of(s);
    if (!partner || !graph.has_statement(*partner) || locked.count(*partner)) return;
    if (gated || !consumed.count(*partner)) {
      labeling.statement_status[*partner] = detail::opposite(status);
      locked.insert(*partner);
    }
  };

  bool gated = true;
  std::vector<NodeRef> order = detail::evaluation_order(graph, gated);

  // Audience statuses first; accepting a statement rejects its complement.
  for (const auto& [sid, _] : graph.statements()) {
    if (locked.count(sid)) continue;
    if (audience.accepted.count(sid)) decide(sid, StatementStatus::accepted, gated);
    else if (audience.rejected.count(sid)) decide(sid, StatementStatus::rejected, gated);
  }

  for (const NodeRef& node : order) {
    if (node.kind == NodeRef::Kind::argument) {
      ArgumentId aid{node.id};
      labeling.argument_applicable[aid] = is_applicable(graph, labeling, aid);
      for (const Premise& p : graph.argument(aid).premises()) consumed.insert(p.statement);
      continue;
    }
    StatementId sid{node.id};
    if (locked.count(sid)) continue;
    bool has_pro = false, has_con = false;
    double max_pro = 0.0, max_con = 0.0;
    for (const ArgumentId& aid : graph.arguments_for(sid)) {
      if (!labeling.argument_applicable.at(aid)) continue;
      const Argument& arg = graph.argument(aid);
      double w = arg.weight().value();
      if (arg.direction() == Direction::pro) {
        max_pro = has_pro ? std::max(max_pro, w) : w;
        has_pro = true;
      } else {
        max_con = has_con ? std::max(max_con, w) : w;
        has_con = true;
      }
    }
    StatementStatus status = detail::aggregate(standard, has_pro, max_pro, has_con, max_con);
    if (status == StatementStatus::undecided) continue;
    decide(sid, status, gated);
  }
  return labeling;
}

// Minimal subgraph reproducing the status of s: the winning route of
// applicable arguments below s, their premises, and — where a status came
// from the complement link — the partner's route. Re-evaluating the result
// with the same audience yields the same status for s.
inline ArgumentGraph proof_subgraph(const ArgumentGraph& graph, const Labeling& labeling,
                                    const StatementId& target) {
  auto it = labeling.statement_status.find(target);
  if (it == labeling.statement_status.end() || it->second == StatementStatus::undecided)
    raise(Errc::not_decided, "statement '" + target.value + "' has no decided status");

  std::set<StatementId> statements;
  std::set<ArgumentId> arguments;

  auto include = [&](auto&& self, const StatementId& s, StatementStatus status) -> void {
    if (!statements.insert(s).second) return;

    // Strongest applicable argument in the status direction; smallest id on ties.
    Direction wanted = status == StatementStatus::accepted ? Direction::pro : Direction::con;
    std::optional<ArgumentId> route;
    double best = -1.0;
    for (const ArgumentId& aid : graph.arguments_for(s)) {
      const Argument& arg = graph.argument(aid);
      if (arg.direction() != wanted) continue;
      auto applicable = labeling.argument_applicable.find(aid);
      if (applicable == labeling.argument_applicable.end() || !applicable->second) continue;
      if (arg.weight().value() > best) {
        best = arg.weight().value();
        route = aid;
      }
    }
    if (route) {
      arguments.insert(*route);
      for (const Premise& p : graph.argument(*route).premises()) {
        auto ps = labeling.statement_status.find(p.statement);
        if (p.kind == PremiseKind::ordinary && ps != labeling.statement_status.end() &&
            ps->second == StatementStatus::accepted)
          self(self, p.statement, StatementStatus::accepted);
        else
          statements.insert(p.statement);
      }
      return;
    }
    auto partner = graph.complement_of(s);
    if (partner && graph.has_statement(*partner)) {
      auto ps = labeling.statement_status.find(*partner);
      if (ps != labeling.statement_status.end() && ps->second == detail::opposite(status)) {
        self(self, *partner, ps->second);
        return;
      }
    }
    // No route and no complement support: the status is audience-given and
    // the bare node suffices.
  };
  include(include, target, it->second);

  GraphBuilder builder;
  for (const StatementId& sid : statements)
    builder.add_statement(sid, graph.statement(sid).text);
  for (const StatementId& sid : statements) {
    auto partner = graph.statement(sid).complement;
    if (partner && sid < *partner && statements.count(*partner))
      builder.link_complement(sid, *partner);
  }
  for (const ArgumentId& aid : arguments) {
    const Argument& arg = graph.argument(aid);
    std::vector<Premise> premises(arg.premises().begin(), arg.premises().end());
    builder.add_argument(aid, arg.conclusion(), arg.direction(), premises, arg.weight());
  }
  return builder.build();
}

}  // namespace arguendo
