#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arguendo {

// Contract-breach categories. Structural defects detected by validate() are
// reported as data in a ValidationReport, not thrown; everything here is a
// hard precondition or input failure.
enum class Errc {
  // graph construction
  self_complement,
  already_linked,
  unknown_statement,
  unknown_argument,
  duplicate_premise,
  duplicate_id,
  cycle_introduced,
  cyclic_graph,
  // abstract framework
  foreign_argument,
  // evaluation
  unresolved_premise,
  invalid_graph,
  incoherent_audience,
  not_decided,
  // pleadings and awards
  unknown_agent,
  arbitrator_cannot_plead,
  unknown_item,
  no_proposals,
  universe_mismatch,
  // case files
  syntax_error,
  schema_error,
  reference_error,
  domain_error,
  io_error,
  usage_error,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::self_complement: return "self-complement";
    case Errc::already_linked: return "already-linked";
    case Errc::unknown_statement: return "unknown-statement";
    case Errc::unknown_argument: return "unknown-argument";
    case Errc::duplicate_premise: return "duplicate-premise";
    case Errc::duplicate_id: return "duplicate-id";
    case Errc::cycle_introduced: return "cycle-introduced";
    case Errc::cyclic_graph: return "cyclic-graph";
    case Errc::foreign_argument: return "foreign-argument";
    case Errc::unresolved_premise: return "unresolved-premise";
    case Errc::invalid_graph: return "invalid-graph";
    case Errc::incoherent_audience: return "incoherent-audience";
    case Errc::not_decided: return "not-decided";
    case Errc::unknown_agent: return "unknown-agent";
    case Errc::arbitrator_cannot_plead: return "arbitrator-cannot-plead";
    case Errc::unknown_item: return "unknown-item";
    case Errc::no_proposals: return "no-proposals";
    case Errc::universe_mismatch: return "universe-mismatch";
    case Errc::syntax_error: return "syntax-error";
    case Errc::schema_error: return "schema-error";
    case Errc::reference_error: return "reference-error";
    case Errc::domain_error: return "domain-error";
    case Errc::io_error: return "io-error";
    case Errc::usage_error: return "usage-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + std::move(message)),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace arguendo
