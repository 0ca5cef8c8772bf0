#pragma once

// Pleadings record (two parties proposing solutions per dispositive item),
// decision-space enumeration, award compliance under four justification
// regimes, and the six empirical justification patterns.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arguendo/errors.hpp"
#include "arguendo/graph.hpp"

namespace arguendo {

enum class Role { claimant, defendant, arbitrator };

inline const char* to_string(Role role) {
  switch (role) {
    case Role::claimant: return "claimant";
    case Role::defendant: return "defendant";
    case Role::arbitrator: return "arbitrator";
  }
  return "?";
}

struct Agent {
  std::string name;
  Role role = Role::claimant;
  auto operator<=>(const Agent&) const = default;
};

struct DispositiveItem {
  std::string id;
  std::string description;
  auto operator<=>(const DispositiveItem&) const = default;
};

// A conclusion backed by reasons. Grounds are nonempty and never contain the
// conclusion itself.
struct Solution {
  StatementId conclusion;
  std::set<StatementId> grounds;
  auto operator<=>(const Solution&) const = default;
};

inline void require_well_formed(const Solution& solution) {
  if (solution.grounds.empty())
    raise(Errc::domain_error, "solution for '" + solution.conclusion.value + "' has no grounds");
  if (solution.grounds.count(solution.conclusion))
    raise(Errc::domain_error,
          "solution concludes '" + solution.conclusion.value + "' from itself");
}

struct Proposal {
  std::string id;  // assigned on recording, "p1", "p2", ...
  Agent agent;
  DispositiveItem item;
  Solution solution;
  bool operator==(const Proposal&) const = default;
};

// How far party claims bind the decision: both conclusion and grounds, the
// conclusion only, the grounds only, or not at all.
enum class Regime { bound_both, bound_conclusion, bound_premises, unbound };

// Whether the arbitrator may introduce reasons the parties never pleaded.
enum class InventioMode { inv, inv_star };

inline const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::bound_both: return "bound-both";
    case Regime::bound_conclusion: return "bound-conclusion";
    case Regime::bound_premises: return "bound-premises";
    case Regime::unbound: return "unbound";
  }
  return "?";
}

inline const char* to_string(InventioMode mode) {
  return mode == InventioMode::inv ? "inv" : "inv-star";
}

class PleadingsRecord {
 public:
  PleadingsRecord(Agent claimant, Agent defendant, ArgumentGraph graph)
      : claimant_(std::move(claimant)), defendant_(std::move(defendant)), graph_(std::move(graph)) {
    if (claimant_.role != Role::claimant)
      raise(Errc::domain_error, "agent '" + claimant_.name + "' must have the claimant role");
    if (defendant_.role != Role::defendant)
      raise(Errc::domain_error, "agent '" + defendant_.name + "' must have the defendant role");
    if (claimant_.name == defendant_.name)
      raise(Errc::domain_error, "claimant and defendant must be distinct agents");
  }

  const Agent& claimant() const { return claimant_; }
  const Agent& defendant() const { return defendant_; }
  const ArgumentGraph& graph() const { return graph_; }
  const std::vector<Proposal>& proposals() const { return proposals_; }

  // Dispositive items raised by the parties, in id order.
  std::vector<DispositiveItem> items() const {
    std::map<std::string, DispositiveItem> by_id;
    for (const Proposal& p : proposals_) by_id.try_emplace(p.item.id, p.item);
    std::vector<DispositiveItem> out;
    for (auto& [_, item] : by_id) out.push_back(item);
    return out;
  }

  std::vector<const Proposal*> proposals_for(const std::string& item_id) const {
    std::vector<const Proposal*> out;
    for (const Proposal& p : proposals_)
      if (p.item.id == item_id) out.push_back(&p);
    return out;
  }

  const Proposal* find_proposal(const std::string& proposal_id) const {
    for (const Proposal& p : proposals_)
      if (p.id == proposal_id) return &p;
    return nullptr;
  }

  bool operator==(const PleadingsRecord&) const = default;

  friend std::string record_proposal(PleadingsRecord& record, const Agent& agent,
                                     const DispositiveItem& item, const Solution& solution);

 private:
  Agent claimant_;
  Agent defendant_;
  ArgumentGraph graph_;
  std::vector<Proposal> proposals_;
};

// Appends the proposal and returns its id; an identical proposal by the same
// agent for the same item collapses onto the existing id.
inline std::string record_proposal(PleadingsRecord& record, const Agent& agent,
                                   const DispositiveItem& item, const Solution& solution) {
  if (agent.role == Role::arbitrator)
    raise(Errc::arbitrator_cannot_plead, "agent '" + agent.name + "' adjudicates, it cannot plead");
  if (agent != record.claimant_ && agent != record.defendant_)
    raise(Errc::unknown_agent, "agent '" + agent.name + "' is not a party to the record");
  require_well_formed(solution);
  if (!record.graph_.has_statement(solution.conclusion))
    raise(Errc::unknown_statement, "no statement '" + solution.conclusion.value + "' in the record");
  for (const StatementId& ground : solution.grounds)
    if (!record.graph_.has_statement(ground))
      raise(Errc::unknown_statement, "no statement '" + ground.value + "' in the record");
  for (const Proposal& existing : record.proposals_) {
    if (existing.item.id == item.id && existing.item.description != item.description)
      raise(Errc::domain_error, "item '" + item.id + "' described inconsistently");
    if (existing.agent == agent && existing.item.id == item.id && existing.solution == solution)
      return existing.id;
  }
  Proposal p{"p" + std::to_string(record.proposals_.size() + 1), agent, item, solution};
  record.proposals_.push_back(std::move(p));
  return record.proposals_.back().id;
}

struct SearchSpaceEntry {
  DispositiveItem item;
  Solution solution;
  std::set<std::string> proposers;  // agent names
  auto operator<=>(const SearchSpaceEntry&) const = default;
};

// The finite party-defined search space: every proposed (item, solution),
// annotated with who proposed it. Never contains a non-proposed solution.
inline std::set<SearchSpaceEntry> party_search_space(const PleadingsRecord& record) {
  std::map<std::pair<std::string, Solution>, SearchSpaceEntry> grouped;
  for (const Proposal& p : record.proposals()) {
    auto [it, _] = grouped.try_emplace({p.item.id, p.solution},
                                       SearchSpaceEntry{p.item, p.solution, {}});
    it->second.proposers.insert(p.agent.name);
  }
  std::set<SearchSpaceEntry> out;
  for (auto& [_, entry] : grouped) out.insert(std::move(entry));
  return out;
}

// A decision shape the arbitrator may reach. Closed templates fix the grounds
// exactly; open templates fix a base the arbitrator may extend with reasons
// of their own.
struct DecisionTemplate {
  std::string item;
  StatementId conclusion;
  std::set<StatementId> grounds;
  bool open_grounds = false;
  auto operator<=>(const DecisionTemplate&) const = default;
};

inline bool instantiates(const DecisionTemplate& tmpl, const Solution& solution) {
  if (solution.conclusion != tmpl.conclusion) return false;
  if (tmpl.open_grounds)
    return std::includes(solution.grounds.begin(), solution.grounds.end(),
                         tmpl.grounds.begin(), tmpl.grounds.end());
  return solution.grounds == tmpl.grounds;
}

namespace detail {

// Union of party-pleaded grounds for the given conclusion of the item.
inline std::set<StatementId> ground_union(const std::vector<const Proposal*>& proposals,
                                          const StatementId& conclusion) {
  std::set<StatementId> out;
  for (const Proposal* p : proposals)
    if (p->solution.conclusion == conclusion)
      out.insert(p->solution.grounds.begin(), p->solution.grounds.end());
  return out;
}

}  // namespace detail

// All decisions available for the item. Under inv-star: every party-pleaded
// conclusion with every nonempty subset of the grounds the parties pleaded
// for it (closed templates). Under inv: one open template per conclusion —
// the pleaded grounds plus room for the arbitrator's own reasons.
inline std::set<DecisionTemplate> enumerate_decisions(const PleadingsRecord& record,
                                                      const std::string& item_id,
                                                      InventioMode mode) {
  auto proposals = record.proposals_for(item_id);
  if (proposals.empty())
    raise(Errc::no_proposals, "no party proposed a solution for item '" + item_id + "'");

  std::set<StatementId> conclusions;
  for (const Proposal* p : proposals) conclusions.insert(p->solution.conclusion);

  std::set<DecisionTemplate> out;
  for (const StatementId& z : conclusions) {
    std::set<StatementId> base = detail::ground_union(proposals, z);
    if (mode == InventioMode::inv) {
      out.insert(DecisionTemplate{item_id, z, base, true});
      continue;
    }
    if (base.size() > 20)
      raise(Errc::domain_error, "ground union for '" + z.value +
                                    "' exceeds the enumerable size (2^" +
                                    std::to_string(base.size()) + " subsets)");
    std::vector<StatementId> pool(base.begin(), base.end());
    for (std::size_t mask = 1; mask < (std::size_t{1} << pool.size()); ++mask) {
      std::set<StatementId> grounds;
      for (std::size_t bit = 0; bit < pool.size(); ++bit)
        if (mask & (std::size_t{1} << bit)) grounds.insert(pool[bit]);
      out.insert(DecisionTemplate{item_id, z, std::move(grounds), false});
    }
  }
  return out;
}

struct AwardItem {
  DispositiveItem item;
  Solution decision;
  bool public_issue = false;
  bool parties_consulted = false;
  std::set<std::string> addressed;  // proposal ids the award responds to
  bool operator==(const AwardItem&) const = default;
};

class Award {
 public:
  void add_item(AwardItem item) {
    require_well_formed(item.decision);
    for (const AwardItem& existing : items_)
      if (existing.item.id == item.item.id)
        raise(Errc::duplicate_id, "award already decides item '" + item.item.id + "'");
    items_.push_back(std::move(item));
  }
  const std::vector<AwardItem>& items() const { return items_; }

  bool operator==(const Award&) const = default;

 private:
  std::vector<AwardItem> items_;
};

enum class AwardViolationKind {
  ultra_petita,
  citra_petita,
  new_ground,
  public_issue_without_consultation,
};

enum class AwardWarningKind { unaddressed_argument };

inline const char* to_string(AwardViolationKind kind) {
  switch (kind) {
    case AwardViolationKind::ultra_petita: return "ultra-petita";
    case AwardViolationKind::citra_petita: return "citra-petita";
    case AwardViolationKind::new_ground: return "new-ground";
    case AwardViolationKind::public_issue_without_consultation:
      return "public-issue-without-consultation";
  }
  return "?";
}

inline const char* to_string(AwardWarningKind kind) {
  switch (kind) {
    case AwardWarningKind::unaddressed_argument: return "unaddressed-argument";
  }
  return "?";
}

struct AwardViolation {
  AwardViolationKind kind;
  std::string item;
  std::string detail;
  auto operator<=>(const AwardViolation&) const = default;
};

struct AwardWarning {
  AwardWarningKind kind;
  std::string item;
  std::string proposal;
  auto operator<=>(const AwardWarning&) const = default;
};

struct ComplianceReport {
  std::vector<AwardViolation> violations;
  std::vector<AwardWarning> warnings;
  bool compliant() const { return violations.empty(); }
};

// Checks the award against the record under one regime. Public issues sit
// outside the parties' claims, so the claim bounds never apply to them; what
// they require instead is consultation, whatever the regime. Under inv-star
// any ground the parties never pleaded for the chosen conclusion is vetoed.
// Items the parties raised but the award skips are citra petita.
inline ComplianceReport check_award(const Award& award, const PleadingsRecord& record,
                                    Regime regime, InventioMode mode) {
  for (const AwardItem& ai : award.items()) {
    auto missing = [&](const StatementId& s) { return !record.graph().has_statement(s); };
    if (missing(ai.decision.conclusion))
      raise(Errc::universe_mismatch, "award concludes '" + ai.decision.conclusion.value +
                                         "', unknown to the record");
    for (const StatementId& g : ai.decision.grounds)
      if (missing(g))
        raise(Errc::universe_mismatch, "award ground '" + g.value + "' is unknown to the record");
  }

  ComplianceReport report;
  for (const AwardItem& ai : award.items()) {
    const std::string& item = ai.item.id;
    const Solution& d = ai.decision;
    auto proposals = record.proposals_for(item);

    if (ai.public_issue) {
      if (!ai.parties_consulted)
        report.violations.push_back({AwardViolationKind::public_issue_without_consultation, item,
                                     "issue raised by the arbitrator without hearing the parties"});
      continue;
    }

    bool bound_ok = true;
    switch (regime) {
      case Regime::bound_both:
        bound_ok = std::any_of(proposals.begin(), proposals.end(), [&](const Proposal* p) {
          return p->solution == d;
        });
        break;
      case Regime::bound_conclusion:
        bound_ok = std::any_of(proposals.begin(), proposals.end(), [&](const Proposal* p) {
          return p->solution.conclusion == d.conclusion;
        });
        break;
      case Regime::bound_premises:
        bound_ok = std::any_of(proposals.begin(), proposals.end(), [&](const Proposal* p) {
          return p->solution.grounds == d.grounds;
        });
        break;
      case Regime::unbound: break;
    }
    if (!bound_ok)
      report.violations.push_back({AwardViolationKind::ultra_petita, item,
                                   "decision '" + d.conclusion.value +
                                       "' goes beyond what the parties claimed"});

    if (mode == InventioMode::inv_star) {
      std::set<StatementId> pleaded = detail::ground_union(proposals, d.conclusion);
      std::vector<std::string> novel;
      for (const StatementId& g : d.grounds)
        if (!pleaded.count(g)) novel.push_back(g.value);
      if (!novel.empty()) {
        std::string detail = "grounds never pleaded for this conclusion:";
        for (const std::string& g : novel) detail += " '" + g + "'";
        report.violations.push_back({AwardViolationKind::new_ground, item, detail});
      }
    }
  }

  for (const DispositiveItem& item : record.items()) {
    bool decided = std::any_of(award.items().begin(), award.items().end(),
                               [&](const AwardItem& ai) { return ai.item.id == item.id; });
    if (!decided)
      report.violations.push_back({AwardViolationKind::citra_petita, item.id,
                                   "raised by the parties but left undecided"});
  }

  for (const AwardItem& ai : award.items())
    for (const Proposal* p : record.proposals_for(ai.item.id))
      if (!ai.addressed.count(p->id))
        report.warnings.push_back({AwardWarningKind::unaddressed_argument, ai.item.id, p->id});

  return report;
}

// The six recurring justification shapes, tried in this order.
enum class PatternLabel {
  shared_argument_adopted,         // (1) both parties pleaded it, the award adopts it
  new_argument_public_issue,       // (2) arbitrator-raised public issue, parties consulted
  whole_party_argument_adopted,    // (3) one party's solution adopted verbatim
  consensus_adopted,               // (4) agreed conclusion, grounds drawn from both sides
  conclusion_kept_premise_replaced,  // (5) claimant's conclusion on different reasons
  premise_kept_conclusion_switched,  // (6) shared premise, defendant's conclusion
};

inline const char* to_string(PatternLabel label) {
  switch (label) {
    case PatternLabel::shared_argument_adopted: return "shared-argument-adopted";
    case PatternLabel::new_argument_public_issue: return "new-argument-public-issue";
    case PatternLabel::whole_party_argument_adopted: return "whole-party-argument-adopted";
    case PatternLabel::consensus_adopted: return "consensus-adopted";
    case PatternLabel::conclusion_kept_premise_replaced:
      return "conclusion-kept-premise-replaced";
    case PatternLabel::premise_kept_conclusion_switched:
      return "premise-kept-conclusion-switched";
  }
  return "?";
}

// Labels the award item by the first matching pattern, in the fixed order
// (1), (4), (3), (2), (5), (6); nullopt when nothing matches. The rule-(3)
// carve-out keeps exact adoptions of the defendant's solution over a premise
// both sides pleaded available for rule (6).
inline std::optional<PatternLabel> classify_pattern(const AwardItem& award_item,
                                                    const PleadingsRecord& record) {
  const StatementId& z = award_item.decision.conclusion;
  const std::set<StatementId>& zg = award_item.decision.grounds;
  auto proposals = record.proposals_for(award_item.item.id);

  std::set<Solution> alpha_solutions, beta_solutions;
  std::set<StatementId> alpha_conclusions, beta_conclusions;
  std::set<std::set<StatementId>> alpha_grounds, beta_grounds;
  for (const Proposal* p : proposals) {
    bool is_alpha = p->agent == record.claimant();
    (is_alpha ? alpha_solutions : beta_solutions).insert(p->solution);
    (is_alpha ? alpha_conclusions : beta_conclusions).insert(p->solution.conclusion);
    (is_alpha ? alpha_grounds : beta_grounds).insert(p->solution.grounds);
  }

  Solution decision{z, zg};
  bool switched_onto_shared_premise = beta_conclusions.count(z) && !alpha_conclusions.count(z) &&
                                      alpha_grounds.count(zg) && beta_grounds.count(zg);

  if (alpha_solutions.count(decision) && beta_solutions.count(decision))
    return PatternLabel::shared_argument_adopted;
  if (alpha_conclusions.count(z) && beta_conclusions.count(z)) {
    std::set<StatementId> pleaded = detail::ground_union(proposals, z);
    if (std::includes(pleaded.begin(), pleaded.end(), zg.begin(), zg.end()))
      return PatternLabel::consensus_adopted;
  }
  if ((alpha_solutions.count(decision) || beta_solutions.count(decision)) &&
      !switched_onto_shared_premise)
    return PatternLabel::whole_party_argument_adopted;
  if (award_item.public_issue && award_item.parties_consulted)
    return PatternLabel::new_argument_public_issue;
  if (alpha_conclusions.count(z)) return PatternLabel::conclusion_kept_premise_replaced;
  if (switched_onto_shared_premise) return PatternLabel::premise_kept_conclusion_switched;
  return std::nullopt;
}

}  // namespace arguendo
