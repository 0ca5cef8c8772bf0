#pragma once

// Graph-description text: statements as boxes, arguments as circles labeled
// "+" or "−". A supplied labeling decorates statements — "x " prefix when
// rejected, bold when accepted. Nodes and edges are emitted in id order, so
// the same input always yields the same bytes.

#include <optional>
#include <sstream>
#include <string>

#include "arguendo/errors.hpp"
#include "arguendo/evaluation.hpp"
#include "arguendo/graph.hpp"

namespace arguendo {

namespace detail {

inline std::string dot_escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace detail

inline std::string export_dot(const ArgumentGraph& graph,
                              const std::optional<Labeling>& labeling = std::nullopt) {
  if (!validate(graph).ok()) raise(Errc::invalid_graph, "refusing to export an invalid graph");

  // Node names are kind-prefixed so a statement and an argument sharing an id
  // cannot collide.
  std::ostringstream out;
  out << "digraph argument_graph {\n";
  for (const auto& [sid, st] : graph.statements()) {
    std::string label = st.text.empty() ? sid.value : st.text;
    std::string attrs = "shape=box";
    if (labeling) {
      auto found = labeling->statement_status.find(sid);
      if (found != labeling->statement_status.end()) {
        if (found->second == StatementStatus::rejected) label = "x " + label;
        if (found->second == StatementStatus::accepted) attrs += ", style=bold";
      }
    }
    out << "  \"s:" << detail::dot_escape(sid.value) << "\" [" << attrs << ", label=\""
        << detail::dot_escape(label) << "\"];\n";
  }
  for (const auto& [aid, arg] : graph.arguments())
    out << "  \"a:" << detail::dot_escape(aid.value) << "\" [shape=circle, label=\""
        << (arg.direction() == Direction::pro ? "+" : "−") << "\"];\n";
  for (const auto& [aid, arg] : graph.arguments()) {
    for (const Premise& p : arg.premises()) {
      out << "  \"s:" << detail::dot_escape(p.statement.value) << "\" -> \"a:"
          << detail::dot_escape(aid.value) << "\"";
      if (p.kind == PremiseKind::assumption) out << " [style=dashed]";
      if (p.kind == PremiseKind::exception) out << " [style=dotted]";
      out << ";\n";
    }
    out << "  \"a:" << detail::dot_escape(aid.value) << "\" -> \"s:"
        << detail::dot_escape(arg.conclusion().value) << "\";\n";
  }
  for (const auto& [sid, st] : graph.statements())
    if (st.complement && sid < *st.complement)
      out << "  \"s:" << detail::dot_escape(sid.value) << "\" -> \"s:"
          << detail::dot_escape(st.complement->value)
          << "\" [dir=none, style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

}  // namespace arguendo
