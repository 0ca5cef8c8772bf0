// Acceptance suite: ten exit-gate checks over the whole stack, each printed
// as one [PASS]/[FAIL] line with its runtime. Checks never abort the run;
// the process status reports whether all ten held.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arguendo/arguendo.hpp"
#include "support.hpp"

using namespace arguendo;
using testsupport::A;
using testsupport::S;

namespace {

// ---------------------------------------------------------------- harness --

struct Checker {
  int failed = 0;
  std::ostringstream first_problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failed < 3) first_problems << (failed ? " | " : "") << what;
    ++failed;
  }
  std::string summary() const {
    if (!failed) return "";
    std::ostringstream out;
    out << failed << " failed check(s): " << first_problems.str();
    return out.str();
  }
};

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun run;
  run.status = run_cli(args, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

std::string fixture(const std::string& name) {
  return std::string(ARGUENDO_CASES_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += contains(line, needle);
  return n;
}

// ------------------------------------------- independent bitmask oracle ----

// Brute-force reference semantics over masks; shares no code with the engine.
struct BruteFramework {
  std::vector<ArgumentId> ids;
  std::vector<std::vector<bool>> attack;

  bool conflict_free(unsigned mask) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) && attack[i][j]) return false;
    return true;
  }
  bool mask_attacks(unsigned mask, std::size_t target) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if ((mask >> i & 1u) && attack[i][target]) return true;
    return false;
  }
  bool admissible(unsigned mask) const {
    if (!conflict_free(mask)) return false;
    for (std::size_t x = 0; x < ids.size(); ++x) {
      if (!(mask >> x & 1u)) continue;
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (attack[j][x] && !mask_attacks(mask, j)) return false;
    }
    return true;
  }
  ArgumentSet to_set(unsigned mask) const {
    ArgumentSet out;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask >> i & 1u) out.insert(ids[i]);
    return out;
  }
  std::set<ArgumentSet> preferred() const {
    std::vector<unsigned> admitted;
    for (unsigned mask = 0; mask < (1u << ids.size()); ++mask)
      if (admissible(mask)) admitted.push_back(mask);
    std::set<ArgumentSet> out;
    for (unsigned mask : admitted) {
      bool maximal = true;
      for (unsigned other : admitted)
        if (other != mask && (mask & other) == mask) maximal = false;
      if (maximal) out.insert(to_set(mask));
    }
    return out;
  }
};

struct RandomAf {
  AbstractFramework framework;
  BruteFramework brute;
};

const std::vector<RandomAf>& random_frameworks() {
  static const std::vector<RandomAf> cache = [] {
    std::mt19937 rng(714025);
    std::vector<RandomAf> out;
    for (int round = 0; round < 220; ++round) {
      std::uniform_int_distribution<std::size_t> size_dist(0, 8);
      std::size_t n = size_dist(rng);
      std::uniform_real_distribution<double> density_dist(0.0, 0.6);
      double density = density_dist(rng);
      std::bernoulli_distribution edge(density);

      RandomAf af;
      for (std::size_t i = 0; i < n; ++i) af.brute.ids.push_back(A("x" + std::to_string(i)));
      af.brute.attack.assign(n, std::vector<bool>(n, false));
      for (const ArgumentId& id : af.brute.ids) af.framework.add_argument(id);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (edge(rng)) {
            af.brute.attack[i][j] = true;
            af.framework.add_attack(af.brute.ids[i], af.brute.ids[j]);
          }
      out.push_back(std::move(af));
    }
    return out;
  }();
  return cache;
}

// ------------------------------------------------ record/award generation --

ArgumentGraph plain_pool(std::size_t n, const std::string& prefix) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i)
    b.add_statement(S(prefix + std::to_string(i)), "fact " + prefix + std::to_string(i));
  return b.build();
}

std::set<StatementId> random_grounds(std::mt19937& rng, const std::vector<StatementId>& pool,
                                     const StatementId& conclusion, std::size_t max_size) {
  std::set<StatementId> out;
  std::uniform_int_distribution<std::size_t> count_dist(1, max_size);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t want = count_dist(rng);
  while (out.size() < want) {
    const StatementId& candidate = pool[pick(rng)];
    if (candidate != conclusion) out.insert(candidate);
  }
  return out;
}

// ------------------------------------------------------- id permutation ----

std::map<StatementId, StatementId> reversing_permutation(const ArgumentGraph& graph) {
  std::vector<StatementId> ids;
  for (const auto& [sid, _] : graph.statements()) ids.push_back(sid);
  std::map<StatementId, StatementId> perm;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::size_t rank = ids.size() - 1 - i;
    std::string fresh = "m" + std::string(rank < 10 ? "0" : "") + std::to_string(rank);
    perm[ids[i]] = S(fresh);
  }
  return perm;
}

std::set<StatementId> remap(const std::set<StatementId>& ids,
                            const std::map<StatementId, StatementId>& perm) {
  std::set<StatementId> out;
  for (const StatementId& id : ids) out.insert(perm.at(id));
  return out;
}

PleadingsRecord permute_record(const PleadingsRecord& record,
                               const std::map<StatementId, StatementId>& perm) {
  GraphBuilder b;
  for (const auto& [sid, st] : record.graph().statements()) b.add_statement(perm.at(sid), st.text);
  for (const auto& [sid, st] : record.graph().statements())
    if (st.complement && sid < *st.complement)
      b.link_complement(perm.at(sid), perm.at(*st.complement));
  for (const auto& [aid, arg] : record.graph().arguments()) {
    std::vector<Premise> premises;
    for (const Premise& p : arg.premises()) premises.push_back({perm.at(p.statement), p.kind});
    b.add_argument(aid, perm.at(arg.conclusion()), arg.direction(), premises, arg.weight());
  }
  PleadingsRecord out{record.claimant(), record.defendant(), b.build()};
  for (const Proposal& p : record.proposals())
    record_proposal(out, p.agent, p.item,
                    Solution{perm.at(p.solution.conclusion), remap(p.solution.grounds, perm)});
  return out;
}

AwardItem permute_item(const AwardItem& item, const std::map<StatementId, StatementId>& perm) {
  return AwardItem{item.item,
                   Solution{perm.at(item.decision.conclusion), remap(item.decision.grounds, perm)},
                   item.public_issue, item.parties_consulted, item.addressed};
}

// ------------------------------------------------------------- criteria ----

void criterion_cisg(Checker& check) {
  CliRun evaluated = cli({"evaluate", fixture("cisg.case")});
  check.require(evaluated.status == 0, "evaluate exited " + std::to_string(evaluated.status));
  for (const char* line : {"s1: accepted", "s2: accepted", "s3: accepted", "s4: accepted",
                           "c: rejected", "nc: accepted"})
    check.require(contains(evaluated.out, line), std::string("missing '") + line + "'");

  CliRun dot = cli({"export-dot", fixture("cisg.case"), "--evaluated"});
  check.require(dot.status == 0, "export-dot exited " + std::to_string(dot.status));
  check.require(contains(dot.out, "label=\"x CISG applies\""), "rejection mark missing on c");
}

void criterion_oracle(Checker& check) {
  for (const RandomAf& af : random_frameworks()) {
    std::set<ArgumentSet> expected = af.brute.preferred();
    std::set<ArgumentSet> actual = preferred_extensions(af.framework);
    check.require(actual == expected,
                  "preferred mismatch on |A|=" + std::to_string(af.brute.ids.size()));
  }
}

void criterion_chain(Checker& check) {
  for (const RandomAf& af : random_frameworks()) {
    std::set<ArgumentSet> preferred = preferred_extensions(af.framework);
    for (const ArgumentSet& extension : preferred)
      check.require(is_admissible(af.framework, extension), "preferred not admissible");

    std::size_t n = af.brute.ids.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ArgumentSet set = af.brute.to_set(mask);
      if (is_admissible(af.framework, set))
        check.require(is_conflict_free(af.framework, set), "admissible not conflict-free");
    }

    ArgumentSet grounded = grounded_extension(af.framework);
    for (const ArgumentSet& extension : preferred)
      check.require(std::includes(extension.begin(), extension.end(), grounded.begin(),
                                  grounded.end()),
                    "grounded not within a preferred extension");
  }
}

void criterion_lattice(Checker& check) {
  std::mt19937 rng(476190);
  ArgumentGraph graph = plain_pool(8, "t");
  std::vector<StatementId> pool;
  for (const auto& [sid, _] : graph.statements()) pool.push_back(sid);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Agent alpha{"alpha", Role::claimant};
  Agent beta{"beta", Role::defendant};

  for (int round = 0; round < 550; ++round) {
    PleadingsRecord record{alpha, beta, graph};
    std::size_t item_count = 1 + rng() % 2;
    std::vector<DispositiveItem> items;
    for (std::size_t i = 0; i < item_count; ++i)
      items.push_back({"d" + std::to_string(i + 1), "question " + std::to_string(i + 1)});
    for (const DispositiveItem& item : items) {
      std::size_t proposal_count = 1 + rng() % 3;
      for (std::size_t p = 0; p < proposal_count; ++p) {
        const StatementId& conclusion = pool[pick(rng)];
        record_proposal(record, rng() % 2 ? alpha : beta, item,
                        Solution{conclusion, random_grounds(rng, pool, conclusion, 3)});
      }
    }

    Award award;
    for (const DispositiveItem& item : items) {
      if (rng() % 4 == 0) continue;  // leave some items undecided
      const StatementId& conclusion = pool[pick(rng)];
      award.add_item(AwardItem{item, Solution{conclusion,
                                              random_grounds(rng, pool, conclusion, 3)},
                               rng() % 8 == 0, rng() % 2 == 0, {}});
    }
    if (rng() % 4 == 0) {
      const StatementId& conclusion = pool[pick(rng)];
      award.add_item(AwardItem{DispositiveItem{"d9", "nobody asked"},
                               Solution{conclusion, random_grounds(rng, pool, conclusion, 3)},
                               rng() % 8 == 0, rng() % 2 == 0, {}});
    }

    for (InventioMode mode : {InventioMode::inv, InventioMode::inv_star}) {
      bool both = check_award(award, record, Regime::bound_both, mode).compliant();
      bool conclusion_only = check_award(award, record, Regime::bound_conclusion, mode).compliant();
      bool premises_only = check_award(award, record, Regime::bound_premises, mode).compliant();
      bool unbound = check_award(award, record, Regime::unbound, mode).compliant();
      check.require(!both || (conclusion_only && premises_only),
                    "bound-both passed but a single bound failed");
      check.require(!conclusion_only || unbound, "bound-conclusion passed but unbound failed");
      check.require(!premises_only || unbound, "bound-premises passed but unbound failed");
    }
  }
}

void criterion_enumeration(Checker& check) {
  std::vector<PleadingsRecord> records;
  records.push_back(testsupport::cisg_record());
  records.push_back(testsupport::solomon_record());
  {
    ArgumentGraph graph = plain_pool(6, "u");
    PleadingsRecord synthetic{Agent{"alpha", Role::claimant}, Agent{"beta", Role::defendant},
                              graph};
    DispositiveItem q{"q", "which remedy applies"};
    record_proposal(synthetic, synthetic.claimant(), q, Solution{S("u0"), {S("u1"), S("u2")}});
    record_proposal(synthetic, synthetic.defendant(), q, Solution{S("u0"), {S("u2"), S("u3")}});
    record_proposal(synthetic, synthetic.defendant(), q, Solution{S("u3"), {S("u4"), S("u5")}});
    record_proposal(synthetic, synthetic.claimant(), q, Solution{S("u1"), {S("u0"), S("u5")}});
    records.push_back(std::move(synthetic));
  }

  for (const PleadingsRecord& record : records) {
    const DispositiveItem item = record.items().front();

    std::set<std::pair<StatementId, std::set<StatementId>>> accepted;
    std::vector<StatementId> pool;
    for (const auto& [sid, _] : record.graph().statements()) pool.push_back(sid);
    for (const StatementId& conclusion : pool) {
      std::vector<StatementId> rest;
      for (const StatementId& s : pool)
        if (s != conclusion) rest.push_back(s);
      for (unsigned mask = 1; mask < (1u << rest.size()); ++mask) {
        std::set<StatementId> grounds;
        for (std::size_t bit = 0; bit < rest.size(); ++bit)
          if (mask >> bit & 1u) grounds.insert(rest[bit]);
        Award award;
        award.add_item(AwardItem{item, Solution{conclusion, grounds}, false, false, {}});
        if (check_award(award, record, Regime::bound_conclusion, InventioMode::inv_star)
                .compliant())
          accepted.insert({conclusion, grounds});
      }
    }

    std::set<std::pair<StatementId, std::set<StatementId>>> enumerated;
    for (const DecisionTemplate& t : enumerate_decisions(record, item.id, InventioMode::inv_star)) {
      check.require(!t.open_grounds, "closed enumeration produced an open template");
      enumerated.insert({t.conclusion, t.grounds});
    }
    check.require(enumerated == accepted,
                  "enumeration disagrees with brute force on item '" + item.id + "'");
  }
}

void criterion_solomon(Checker& check) {
  for (const char* regime : {"bound-both", "bound-conclusion", "bound-premises"}) {
    CliRun run = cli({"check-award", fixture("solomon.case"), "--regime", regime, "--mode", "inv"});
    check.require(run.status == 1, std::string(regime) + " exited " + std::to_string(run.status));
    check.require(count_lines_with(run.out, "ultra-petita") == 1,
                  std::string(regime) + " did not report exactly one ultra-petita line");
  }
  CliRun unbound =
      cli({"check-award", fixture("solomon.case"), "--regime", "unbound", "--mode", "inv"});
  check.require(unbound.status == 0, "unbound exited " + std::to_string(unbound.status));
  check.require(contains(unbound.out, "compliant"), "unbound award not reported compliant");
}

void criterion_patterns(Checker& check) {
  struct Expected {
    const char* file;
    const char* item;
    PatternLabel label;
  };
  const std::vector<Expected> table = {
      {"pattern1.case", "i1", PatternLabel::shared_argument_adopted},
      {"pattern2.case", "pi", PatternLabel::new_argument_public_issue},
      {"pattern3.case", "i1", PatternLabel::whole_party_argument_adopted},
      {"pattern4.case", "i1", PatternLabel::consensus_adopted},
      {"pattern5.case", "i1", PatternLabel::conclusion_kept_premise_replaced},
      {"pattern6.case", "i1", PatternLabel::premise_kept_conclusion_switched},
  };
  for (const Expected& expected : table) {
    CliRun run = cli({"classify", fixture(expected.file), "--format", "machine-readable"});
    std::string line = std::string("pattern\t") + expected.item + "\t" +
                       to_string(expected.label) + "\n";
    check.require(run.status == 0 && run.out == line,
                  std::string(expected.file) + " did not classify to " +
                      to_string(expected.label));

    CaseFile cf = load_case_file(fixture(expected.file));
    auto perm = reversing_permutation(cf.graph);
    PleadingsRecord permuted = permute_record(cf.pleadings, perm);
    std::optional<PatternLabel> relabeled =
        classify_pattern(permute_item(cf.award->items().front(), perm), permuted);
    check.require(relabeled == expected.label,
                  std::string(expected.file) + " changed label under id permutation");
  }
}

void criterion_guards(Checker& check) {
  std::mt19937 rng(118999);
  for (int round = 0; round < 100; ++round) {
    std::size_t k = 1 + rng() % 6;
    GraphBuilder b;
    for (std::size_t i = 0; i < k; ++i)
      b.add_statement(S("s" + std::to_string(i)), "link " + std::to_string(i));

    int refusals = 0;
    if (k == 1) {
      // Degenerate ring: the argument would conclude its own premise.
      try {
        b.add_argument(S("s0"), Direction::pro, {{S("s0"), PremiseKind::ordinary}});
      } catch (const Error& error) {
        refusals += error.code() == Errc::cycle_introduced;
      }
    } else {
      std::vector<std::size_t> order(k);
      for (std::size_t i = 0; i < k; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i : order) {
        try {
          b.add_argument(S("s" + std::to_string((i + 1) % k)),
                         rng() % 2 ? Direction::pro : Direction::con,
                         {{S("s" + std::to_string(i)), PremiseKind::ordinary}});
        } catch (const Error& error) {
          refusals += error.code() == Errc::cycle_introduced;
        }
      }
    }
    check.require(refusals == 1, "ring of " + std::to_string(k) + " closed without refusal");
    check.require(validate(b.graph()).ok(), "builder left an invalid graph behind");
  }

  GraphBuilder b;
  b.add_statement(S("p"), "the door was locked");
  b.add_statement(S("np"), "the door was not locked");
  b.add_statement(S("q"), "the alarm was set");
  b.link_complement(S("p"), S("np"));
  check.require(testsupport::code_of([&] { b.link_complement(S("p"), S("q")); }) ==
                    Errc::already_linked,
                "second complement for p not refused");
  check.require(testsupport::code_of([&] { b.link_complement(S("q"), S("np")); }) ==
                    Errc::already_linked,
                "second complement for np not refused");
  check.require(testsupport::code_of([&] { b.link_complement(S("q"), S("q")); }) ==
                    Errc::self_complement,
                "self-complement not refused");
}

void criterion_determinism(Checker& check) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"evaluate", fixture("cisg.case")},
        std::vector<std::string>{"evaluate", fixture("cisg.case"), "--format",
                                 "machine-readable"},
        std::vector<std::string>{"export-dot", fixture("cisg.case")},
        std::vector<std::string>{"export-dot", fixture("cisg.case"), "--evaluated"}}) {
    CliRun first = cli(args);
    CliRun second = cli(args);
    check.require(first.status == 0 && second.status == 0, "run failed");
    check.require(first.out == second.out && first.err == second.err,
                  "outputs differ between identical runs");
  }
}

void criterion_public_issue(Checker& check) {
  for (const char* regime : {"bound-both", "bound-conclusion", "bound-premises", "unbound"}) {
    for (const char* mode : {"inv", "inv-star"}) {
      CliRun consulted = cli({"check-award", fixture("public_issue_consulted.case"), "--regime",
                              regime, "--mode", mode});
      check.require(consulted.status == 0, std::string("consulted failed under ") + regime +
                                               "/" + mode);

      CliRun unconsulted = cli({"check-award", fixture("public_issue_unconsulted.case"),
                                "--regime", regime, "--mode", mode});
      check.require(unconsulted.status == 1, std::string("unconsulted passed under ") + regime +
                                                 "/" + mode);
      check.require(count_lines_with(unconsulted.out, "public-issue-without-consultation") == 1,
                    std::string("missing consultation violation under ") + regime + "/" + mode);
      check.require(count_lines_with(unconsulted.out, "ultra-petita") == 0 &&
                        count_lines_with(unconsulted.out, "new-ground") == 0,
                    std::string("claim bounds leaked onto the public issue under ") + regime +
                        "/" + mode);
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<void(Checker&)> body;
    double budget_ms;  // 0 = no budget
  };
  const std::vector<Criterion> criteria = {
      {1, "bundled dispute evaluates and renders with the rejection mark", criterion_cisg, 1000},
      {2, "preferred extensions match brute force on 220 random frameworks", criterion_oracle,
       30000},
      {3, "admissibility chain holds on the same frameworks", criterion_chain, 0},
      {4, "regime lattice is monotone over 550 random record/award pairs", criterion_lattice, 0},
      {5, "closed enumeration equals brute-forced compliant decisions", criterion_enumeration, 0},
      {6, "split-the-child award is ultra petita under every bound, compliant unbound",
       criterion_solomon, 0},
      {7, "six award patterns classify as intended and survive id permutation",
       criterion_patterns, 0},
      {8, "cyclic constructions and duplicate complements are refused", criterion_guards, 0},
      {9, "evaluation and export runs are byte-identical", criterion_determinism, 0},
      {10, "public issues hinge on consultation alone, under every regime",
       criterion_public_issue, 0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Checker check;
    std::string crashed;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& error) {
      crashed = error.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    if (criterion.budget_ms > 0 && ms > criterion.budget_ms)
      check.require(false, "runtime " + std::to_string(ms) + " ms exceeds budget of " +
                               std::to_string(criterion.budget_ms) + " ms");

    std::string problem = crashed.empty() ? check.summary() : "threw: " + crashed;
    bool pass = problem.empty();
    failures += !pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number << ": "
              << criterion.name << " (" << static_cast<long>(ms) << " ms)";
    if (!pass) std::cout << " — " << problem;
    std::cout << '\n';
  }

  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures ? 1 : 0;
}
