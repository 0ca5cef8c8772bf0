#pragma once

// Shared fixtures: the sales-convention dispute graph and the judgment-of-two
//-claimants record used across the suites.

#include <stdexcept>
#include <string>
#include <utility>

#include "arguendo/evaluation.hpp"
#include "arguendo/graph.hpp"
#include "arguendo/pleadings.hpp"

namespace testsupport {

inline arguendo::StatementId S(const std::string& v) { return arguendo::StatementId{v}; }
inline arguendo::ArgumentId A(const std::string& v) { return arguendo::ArgumentId{v}; }

// Runs fn, which must raise; hands back the error code for assertions.
template <typename Fn>
inline arguendo::Errc code_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const arguendo::Error& error) {
    return error.code();
  }
  throw std::runtime_error("expected the call to raise");
}

// Two fact chains: s1 supports applying the convention (weak), s2 supports
// the exclusion s4 (strong) which in turn cuts against applying it; s3 is a
// feeble objection to the exclusion.
inline arguendo::ArgumentGraph cisg_graph() {
  using namespace arguendo;
  GraphBuilder b;
  b.add_statement(S("c"), "CISG applies");
  b.add_statement(S("nc"), "CISG does not apply");
  b.link_complement(S("c"), S("nc"));
  b.add_statement(S("s1"), "the parties have places of business in different contracting states");
  b.add_statement(S("s2"), "the contract designates purely domestic Austrian law");
  b.add_statement(S("s3"), "the choice-of-law clause was never initialled");
  b.add_statement(S("s4"), "the parties excluded the convention");
  b.add_argument(A("a1"), S("c"), Direction::pro, {{S("s1"), PremiseKind::ordinary}}, Weight(0.4));
  b.add_argument(A("a2"), S("c"), Direction::con, {{S("s4"), PremiseKind::ordinary}}, Weight(0.8));
  b.add_argument(A("a3"), S("s4"), Direction::pro, {{S("s2"), PremiseKind::ordinary}}, Weight(0.7));
  b.add_argument(A("a4"), S("s4"), Direction::con, {{S("s3"), PremiseKind::ordinary}}, Weight(0.2));
  return b.build();
}

inline arguendo::Audience cisg_audience() {
  return arguendo::Audience{{S("s1"), S("s2"), S("s3")}, {}};
}

inline arguendo::PleadingsRecord cisg_record() {
  using namespace arguendo;
  PleadingsRecord record{Agent{"buyer", Role::claimant}, Agent{"seller", Role::defendant},
                         cisg_graph()};
  DispositiveItem n1{"n1", "does the convention govern the contract"};
  record_proposal(record, record.claimant(), n1, Solution{S("c"), {S("s1")}});
  record_proposal(record, record.defendant(), n1, Solution{S("nc"), {S("s4")}});
  return record;
}

// Both claimants assert motherhood of the same child; the famous decree
// splits it instead — a solution neither side ever put on the record.
inline arguendo::PleadingsRecord solomon_record() {
  using namespace arguendo;
  GraphBuilder b;
  b.add_statement(S("m1"), "the first woman is the child's mother");
  b.add_statement(S("m2"), "the second woman is the child's mother");
  b.add_statement(S("divide"), "the child is divided between the claimants");
  b.add_statement(S("g1"), "the living child lay at the first woman's side at dawn");
  b.add_statement(S("g2"), "the second woman never left the house that night");
  b.add_statement(S("gd"), "each claimant receives an equal share");
  b.add_argument(A("am1"), S("m1"), Direction::pro, {{S("g1"), PremiseKind::ordinary}});
  b.add_argument(A("am2"), S("m2"), Direction::pro, {{S("g2"), PremiseKind::ordinary}});

  PleadingsRecord record{Agent{"first-woman", Role::claimant},
                         Agent{"second-woman", Role::defendant}, b.build()};
  DispositiveItem custody{"custody", "who keeps the child"};
  record_proposal(record, record.claimant(), custody, Solution{S("m1"), {S("g1")}});
  record_proposal(record, record.defendant(), custody, Solution{S("m2"), {S("g2")}});
  return record;
}

}  // namespace testsupport
