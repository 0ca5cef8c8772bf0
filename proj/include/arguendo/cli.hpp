#pragma once

// Command-line surface. Every verb takes one case file; data goes to the
// output stream and diagnostics to the error stream, nothing else. Exit
// statuses: 0 success or compliant award, 1 violations found, 2 bad input,
// 3 broken internal invariant.

#include <cstddef>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arguendo/case_file.hpp"
#include "arguendo/dot.hpp"
#include "arguendo/errors.hpp"
#include "arguendo/evaluation.hpp"
#include "arguendo/graph.hpp"
#include "arguendo/pleadings.hpp"
#include "arguendo/semantics.hpp"

namespace arguendo {

namespace detail {

inline int exit_status_for(Errc code) {
  switch (code) {
    case Errc::invalid_graph:
    case Errc::cyclic_graph:
    case Errc::foreign_argument:
    case Errc::unresolved_premise:
    case Errc::not_decided:
      return 3;
    default:
      return 2;
  }
}

template <typename Ids>
std::string join_ids(const Ids& ids, const char* separator) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += separator;
    out += id.value;
  }
  return out;
}

inline ProofStandard standard_from(const std::string& name) {
  return name == "scintilla" ? ProofStandard::scintilla : ProofStandard::preponderance;
}

inline Regime regime_from(const std::string& name) {
  if (name == "bound-both") return Regime::bound_both;
  if (name == "bound-conclusion") return Regime::bound_conclusion;
  if (name == "bound-premises") return Regime::bound_premises;
  return Regime::unbound;
}

inline InventioMode mode_from(const std::string& name) {
  return name == "inv-star" ? InventioMode::inv_star : InventioMode::inv;
}

inline std::set<ArgumentSet> all_admissible_sets(const AbstractFramework& af) {
  std::vector<ArgumentId> pool(af.arguments().begin(), af.arguments().end());
  if (pool.size() > 16)
    raise(Errc::domain_error, "too many arguments to enumerate admissible sets (" +
                                  std::to_string(pool.size()) + ")");
  std::set<ArgumentSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    ArgumentSet candidate;
    for (std::size_t bit = 0; bit < pool.size(); ++bit)
      if (mask & (std::size_t{1} << bit)) candidate.insert(pool[bit]);
    if (is_admissible(af, candidate)) out.insert(std::move(candidate));
  }
  return out;
}

inline const Award& award_of(const CaseFile& cf) {
  if (!cf.award) raise(Errc::domain_error, "case file has no award section");
  return *cf.award;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"evaluate structured argument cases and audit awards against pleadings"};
  app.name("arguendo");
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::string standard = "preponderance";
  std::string semantics = "preferred";
  std::string regime;
  std::string mode;
  std::string item;
  bool evaluated = false;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("case", path, "case file to read")->required();
    cmd->add_option("--format", format, "text or machine-readable")
        ->check(CLI::IsMember({"text", "machine-readable"}));
    return cmd;
  };

  CLI::App* cmd_evaluate =
      common(app.add_subcommand("evaluate", "statement statuses under a proof standard"));
  cmd_evaluate->add_option("--standard", standard, "proof standard")
      ->check(CLI::IsMember({"preponderance", "scintilla"}));

  CLI::App* cmd_extensions =
      common(app.add_subcommand("extensions", "extensions of the derived abstract framework"));
  cmd_extensions->add_option("--semantics", semantics, "extension semantics")
      ->check(CLI::IsMember({"preferred", "grounded", "admissible"}));

  CLI::App* cmd_check =
      common(app.add_subcommand("check-award", "award compliance with the pleadings"));
  cmd_check->add_option("--regime", regime, "justification-bound regime")
      ->required()
      ->check(CLI::IsMember({"bound-both", "bound-conclusion", "bound-premises", "unbound"}));
  cmd_check->add_option("--mode", mode, "inventio mode")
      ->required()
      ->check(CLI::IsMember({"inv", "inv-star"}));

  CLI::App* cmd_enumerate =
      common(app.add_subcommand("enumerate", "decision space of one dispositive item"));
  cmd_enumerate->add_option("--item", item, "dispositive item id")->required();
  cmd_enumerate->add_option("--mode", mode, "inventio mode")
      ->required()
      ->check(CLI::IsMember({"inv", "inv-star"}));

  CLI::App* cmd_classify = common(app.add_subcommand("classify", "award patterns per item"));

  CLI::App* cmd_dot = common(app.add_subcommand("export-dot", "graph-description text"));
  cmd_dot->add_flag("--evaluated", evaluated, "decorate statements with evaluated statuses");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("arguendo");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const std::string& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& parse_error) {
    return app.exit(parse_error, out, err) == 0 ? 0 : 2;
  }

  const bool machine = format == "machine-readable";
  try {
    CaseFile cf = load_case_file(path);

    if (cmd_evaluate->parsed()) {
      Labeling labeling = evaluate(cf.graph, cf.audience, detail::standard_from(standard));
      for (const auto& [sid, status] : labeling.statement_status) {
        if (machine)
          out << "statement\t" << sid.value << '\t' << to_string(status) << '\n';
        else
          out << sid.value << ": " << to_string(status) << "  (" << cf.graph.statement(sid).text
              << ")\n";
      }
      return 0;
    }

    if (cmd_extensions->parsed()) {
      AbstractFramework af = derive_af(cf.graph);
      std::set<ArgumentSet> sets;
      if (semantics == "preferred") sets = preferred_extensions(af);
      if (semantics == "grounded") sets.insert(grounded_extension(af));
      if (semantics == "admissible") sets = detail::all_admissible_sets(af);
      for (const ArgumentSet& extension : sets) {
        if (machine)
          out << "extension\t" << detail::join_ids(extension, ",") << '\n';
        else
          out << "{" << detail::join_ids(extension, ", ") << "}\n";
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      ComplianceReport report = check_award(detail::award_of(cf), cf.pleadings,
                                            detail::regime_from(regime),
                                            detail::mode_from(mode));
      for (const AwardViolation& v : report.violations) {
        if (machine)
          out << "violation\t" << to_string(v.kind) << '\t' << v.item << '\t' << v.detail << '\n';
        else
          out << to_string(v.kind) << " on item '" << v.item << "': " << v.detail << '\n';
      }
      for (const AwardWarning& w : report.warnings) {
        if (machine)
          out << "warning\t" << to_string(w.kind) << '\t' << w.item << '\t' << w.proposal << '\n';
        else
          out << "warning: " << to_string(w.kind) << " on item '" << w.item << "' (proposal "
              << w.proposal << ")\n";
      }
      if (machine)
        out << "result\t" << (report.compliant() ? "compliant" : "violations") << '\n';
      else if (report.compliant())
        out << "compliant\n";
      else
        out << report.violations.size() << " violation(s)\n";
      return report.compliant() ? 0 : 1;
    }

    if (cmd_enumerate->parsed()) {
      for (const DecisionTemplate& t :
           enumerate_decisions(cf.pleadings, item, detail::mode_from(mode))) {
        if (machine)
          out << "template\t" << t.conclusion.value << '\t' << detail::join_ids(t.grounds, ",")
              << '\t' << (t.open_grounds ? "open" : "closed") << '\n';
        else
          out << "decide " << t.conclusion.value << " on "
              << (t.open_grounds ? "at least" : "exactly") << " {"
              << detail::join_ids(t.grounds, ", ") << "}\n";
      }
      return 0;
    }

    if (cmd_classify->parsed()) {
      for (const AwardItem& ai : detail::award_of(cf).items()) {
        auto label = classify_pattern(ai, cf.pleadings);
        const char* name = label ? to_string(*label) : "no-match";
        if (machine)
          out << "pattern\t" << ai.item.id << '\t' << name << '\n';
        else
          out << ai.item.id << ": " << name << '\n';
      }
      return 0;
    }

    if (cmd_dot->parsed()) {
      std::optional<Labeling> labeling;
      if (evaluated) labeling = evaluate(cf.graph, cf.audience, ProofStandard::preponderance);
      out << export_dot(cf.graph, labeling);
      return 0;
    }
  } catch (const Error& error) {
    err << error.what() << '\n';
    return detail::exit_status_for(error.code());
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << '\n';
    return 3;
  }
  err << "internal error: unhandled subcommand\n";
  return 3;
}

}  // namespace arguendo
