#pragma once

// Textual case files: one JSON document carries the statement graph, the
// audience commitments, the pleadings, and optionally the award. Parsing is
// strict — unknown keys, dangling references, and out-of-domain values are
// rejected with a positioned diagnostic.

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arguendo/errors.hpp"
#include "arguendo/evaluation.hpp"
#include "arguendo/graph.hpp"
#include "arguendo/pleadings.hpp"

namespace arguendo {

inline constexpr int case_format_version = 1;

struct CaseFile {
  int format_version = case_format_version;
  ArgumentGraph graph;
  Audience audience;
  PleadingsRecord pleadings;
  std::optional<Award> award;
  bool operator==(const CaseFile&) const = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

// Structural errors are schema errors; everything the document *means* that
// the model refuses (cycles, duplicate ids, bad weights) is a domain error,
// and unresolved ids are reference errors.
template <typename Fn>
auto reword(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& error) {
    switch (error.code()) {
      case Errc::syntax_error:
      case Errc::schema_error:
      case Errc::reference_error:
      case Errc::domain_error:
      case Errc::io_error:
        throw;
      case Errc::unknown_statement:
      case Errc::unknown_argument:
        raise(Errc::reference_error, error.what());
      default:
        raise(Errc::domain_error, error.what());
    }
  }
}

inline void expect_object(const Json& value, const std::string& where) {
  if (!value.is_object()) raise(Errc::schema_error, where + " must be an object");
}

inline void expect_keys(const Json& object, const std::string& where,
                        const std::vector<std::string>& required,
                        const std::vector<std::string>& optional = {}) {
  expect_object(object, where);
  for (const std::string& key : required)
    if (!object.contains(key))
      raise(Errc::schema_error, where + " is missing '" + key + "'");
  for (const auto& [key, _] : object.items()) {
    bool known = false;
    for (const std::string& k : required)
      if (k == key) { known = true; break; }
    for (const std::string& k : optional)
      if (k == key) { known = true; break; }
    if (!known) raise(Errc::schema_error, where + " has unknown key '" + key + "'");
  }
}

inline std::string get_string(const Json& object, const char* key, const std::string& where) {
  const Json& value = object.at(key);
  if (!value.is_string()) raise(Errc::schema_error, where + " '" + key + "' must be a string");
  return value.get<std::string>();
}

inline const Json& get_array(const Json& object, const char* key, const std::string& where) {
  const Json& value = object.at(key);
  if (!value.is_array()) raise(Errc::schema_error, where + " '" + key + "' must be an array");
  return value;
}

inline bool get_bool(const Json& object, const char* key, const std::string& where,
                     bool fallback) {
  if (!object.contains(key)) return fallback;
  const Json& value = object.at(key);
  if (!value.is_boolean()) raise(Errc::schema_error, where + " '" + key + "' must be a boolean");
  return value.get<bool>();
}

inline std::vector<std::string> get_string_array(const Json& object, const char* key,
                                                 const std::string& where) {
  std::vector<std::string> out;
  for (const Json& element : get_array(object, key, where)) {
    if (!element.is_string())
      raise(Errc::schema_error, where + " '" + key + "' must hold strings");
    out.push_back(element.get<std::string>());
  }
  return out;
}

inline std::string trimmed_number(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace detail

inline CaseFile parse_case_file(const std::string& bytes) {
  using detail::Json;
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const nlohmann::json::parse_error& error) {
    raise(Errc::syntax_error, error.what());
  }
  detail::expect_keys(doc, "case file",
                      {"format_version", "statements", "complements", "arguments", "audience",
                       "pleadings"},
                      {"award"});
  if (!doc.at("format_version").is_number_integer() ||
      doc.at("format_version").get<int>() != case_format_version)
    raise(Errc::schema_error, "format_version must be the integer " +
                                  std::to_string(case_format_version));

  GraphBuilder builder;
  for (const Json& entry : detail::get_array(doc, "statements", "case file")) {
    detail::expect_keys(entry, "statement entry", {"id", "text"});
    std::string id = detail::get_string(entry, "id", "statement entry");
    if (id.empty()) raise(Errc::schema_error, "statement entry has an empty 'id'");
    detail::reword([&] {
      builder.add_statement(StatementId{id}, detail::get_string(entry, "text", "statement entry"));
    });
  }

  for (const Json& entry : detail::get_array(doc, "complements", "case file")) {
    detail::expect_keys(entry, "complement entry", {"statement", "negation"}, {"text"});
    StatementId statement{detail::get_string(entry, "statement", "complement entry")};
    StatementId negation{detail::get_string(entry, "negation", "complement entry")};
    if (!builder.graph().has_statement(statement))
      raise(Errc::reference_error,
            "complement entry names unknown statement '" + statement.value + "'");
    if (builder.graph().has_statement(negation)) {
      if (entry.contains("text"))
        raise(Errc::schema_error, "complement entry redeclares '" + negation.value +
                                      "'; drop the 'text' of the merged node");
    } else {
      if (!entry.contains("text"))
        raise(Errc::schema_error,
              "complement entry must carry 'text' to introduce '" + negation.value + "'");
      detail::reword([&] {
        builder.add_statement(negation, detail::get_string(entry, "text", "complement entry"));
      });
    }
    detail::reword([&] { builder.link_complement(statement, negation); });
  }

  for (const Json& entry : detail::get_array(doc, "arguments", "case file")) {
    detail::expect_keys(entry, "argument entry", {"id", "conclusion", "direction", "premises"},
                        {"weight"});
    std::string id = detail::get_string(entry, "id", "argument entry");
    if (id.empty()) raise(Errc::schema_error, "argument entry has an empty 'id'");
    std::string direction_text = detail::get_string(entry, "direction", "argument entry");
    if (direction_text != "pro" && direction_text != "con")
      raise(Errc::schema_error,
            "argument '" + id + "' direction must be 'pro' or 'con'");
    Direction direction = direction_text == "pro" ? Direction::pro : Direction::con;

    std::vector<Premise> premises;
    for (const Json& premise : detail::get_array(entry, "premises", "argument entry")) {
      detail::expect_keys(premise, "premise entry", {"statement"}, {"kind"});
      PremiseKind kind = PremiseKind::ordinary;
      if (premise.contains("kind")) {
        std::string kind_text = detail::get_string(premise, "kind", "premise entry");
        if (kind_text == "ordinary") kind = PremiseKind::ordinary;
        else if (kind_text == "assumption") kind = PremiseKind::assumption;
        else if (kind_text == "exception") kind = PremiseKind::exception;
        else
          raise(Errc::schema_error, "argument '" + id + "' premise kind '" + kind_text +
                                        "' is not ordinary/assumption/exception");
      }
      premises.push_back({StatementId{detail::get_string(premise, "statement", "premise entry")},
                          kind});
    }

    Weight weight;
    if (entry.contains("weight")) {
      const Json& value = entry.at("weight");
      if (!value.is_number())
        raise(Errc::schema_error, "argument '" + id + "' weight must be a number");
      double w = value.get<double>();
      if (!(w >= 0.0 && w <= 1.0))
        raise(Errc::domain_error, "argument '" + id + "' weight " + detail::trimmed_number(w) +
                                      " outside [0, 1]");
      weight = Weight(w);
    }
    detail::reword([&] {
      builder.add_argument(ArgumentId{id}, StatementId{detail::get_string(entry, "conclusion",
                                                                          "argument entry")},
                           direction, premises, weight);
    });
  }
  ArgumentGraph graph = builder.build();
  ValidationReport health = validate(graph);
  if (!health.ok()) raise(Errc::domain_error, health.violations.front().detail);

  const Json& audience_node = doc.at("audience");
  detail::expect_keys(audience_node, "audience", {"accepted", "rejected"});
  Audience audience;
  for (const std::string& id : detail::get_string_array(audience_node, "accepted", "audience")) {
    if (!graph.has_statement(StatementId{id}))
      raise(Errc::reference_error, "audience accepts unknown statement '" + id + "'");
    audience.accepted.insert(StatementId{id});
  }
  for (const std::string& id : detail::get_string_array(audience_node, "rejected", "audience")) {
    if (!graph.has_statement(StatementId{id}))
      raise(Errc::reference_error, "audience rejects unknown statement '" + id + "'");
    audience.rejected.insert(StatementId{id});
  }
  for (const StatementId& id : audience.accepted) {
    if (audience.rejected.count(id))
      raise(Errc::domain_error, "audience both accepts and rejects '" + id.value + "'");
    auto partner = graph.complement_of(id);
    if (partner && audience.accepted.count(*partner))
      raise(Errc::domain_error, "audience accepts both '" + id.value + "' and its complement");
  }
  for (const StatementId& id : audience.rejected) {
    auto partner = graph.complement_of(id);
    if (partner && audience.rejected.count(*partner))
      raise(Errc::domain_error, "audience rejects both '" + id.value + "' and its complement");
  }

  const Json& pleadings_node = doc.at("pleadings");
  detail::expect_keys(pleadings_node, "pleadings", {"claimant", "defendant", "proposals"});
  PleadingsRecord record = detail::reword([&] {
    return PleadingsRecord{
        Agent{detail::get_string(pleadings_node, "claimant", "pleadings"), Role::claimant},
        Agent{detail::get_string(pleadings_node, "defendant", "pleadings"), Role::defendant},
        graph};
  });

  const Json& proposals_node = pleadings_node.at("proposals");
  detail::expect_object(proposals_node, "pleadings 'proposals'");
  std::map<std::string, std::string> proposal_ids;  // file id -> record id
  std::map<std::string, const Json*> items_in_order;
  for (const auto& [item_id, body] : proposals_node.items()) items_in_order[item_id] = &body;
  for (const auto& [item_id, body] : items_in_order) {
    detail::expect_keys(*body, "item '" + item_id + "'", {"description", "solutions"});
    DispositiveItem item{item_id, detail::get_string(*body, "description", "item")};
    for (const Json& entry : detail::get_array(*body, "solutions", "item")) {
      detail::expect_keys(entry, "solution entry", {"id", "by", "conclusion", "grounds"});
      std::string file_id = detail::get_string(entry, "id", "solution entry");
      if (file_id.empty() || proposal_ids.count(file_id))
        raise(Errc::domain_error, "proposal id '" + file_id + "' is empty or reused");
      std::string by = detail::get_string(entry, "by", "solution entry");
      if (by != "claimant" && by != "defendant")
        raise(Errc::schema_error,
              "proposal '" + file_id + "' must be by 'claimant' or 'defendant'");
      Solution solution{StatementId{detail::get_string(entry, "conclusion", "solution entry")},
                        {}};
      for (const std::string& g : detail::get_string_array(entry, "grounds", "solution entry"))
        solution.grounds.insert(StatementId{g});
      proposal_ids[file_id] = detail::reword([&] {
        return record_proposal(record,
                               by == "claimant" ? record.claimant() : record.defendant(), item,
                               solution);
      });
    }
  }

  std::optional<Award> award;
  if (doc.contains("award")) {
    detail::expect_keys(doc.at("award"), "award", {"items"});
    Award built;
    for (const Json& entry : detail::get_array(doc.at("award"), "items", "award")) {
      detail::expect_keys(entry, "award item", {"item", "conclusion", "grounds"},
                          {"description", "public-issue", "parties-consulted", "addressed"});
      std::string item_id = detail::get_string(entry, "item", "award item");
      std::string description;
      auto raised = record.proposals_for(item_id);
      if (!raised.empty()) description = raised.front()->item.description;
      if (entry.contains("description")) {
        std::string given = detail::get_string(entry, "description", "award item");
        if (!raised.empty() && given != description)
          raise(Errc::domain_error, "award item '" + item_id + "' described inconsistently");
        description = given;
      }

      Solution decision{StatementId{detail::get_string(entry, "conclusion", "award item")}, {}};
      if (!graph.has_statement(decision.conclusion))
        raise(Errc::reference_error,
              "award decides unknown statement '" + decision.conclusion.value + "'");
      for (const std::string& g : detail::get_string_array(entry, "grounds", "award item")) {
        if (!graph.has_statement(StatementId{g}))
          raise(Errc::reference_error, "award cites unknown statement '" + g + "'");
        decision.grounds.insert(StatementId{g});
      }

      std::set<std::string> addressed;
      if (entry.contains("addressed"))
        for (const std::string& ref : detail::get_string_array(entry, "addressed", "award item")) {
          auto it = proposal_ids.find(ref);
          if (it == proposal_ids.end())
            raise(Errc::reference_error, "award addresses unknown proposal '" + ref + "'");
          addressed.insert(it->second);
        }

      detail::reword([&] {
        built.add_item(AwardItem{DispositiveItem{item_id, description}, decision,
                                 detail::get_bool(entry, "public-issue", "award item", false),
                                 detail::get_bool(entry, "parties-consulted", "award item", false),
                                 addressed});
      });
    }
    award = std::move(built);
  }

  return CaseFile{case_format_version, std::move(graph), std::move(audience), std::move(record),
                  std::move(award)};
}

inline std::string serialize_case_file(const CaseFile& cf) {
  using detail::Json;
  Json doc = Json::object();
  doc["format_version"] = cf.format_version;

  Json statements = Json::array();
  for (const auto& [sid, st] : cf.graph.statements())
    statements.push_back({{"id", sid.value}, {"text", st.text}});
  doc["statements"] = std::move(statements);

  Json complements = Json::array();
  for (const auto& [sid, st] : cf.graph.statements())
    if (st.complement && sid < *st.complement)
      complements.push_back({{"statement", sid.value}, {"negation", st.complement->value}});
  doc["complements"] = std::move(complements);

  Json arguments = Json::array();
  for (const auto& [aid, arg] : cf.graph.arguments()) {
    Json premises = Json::array();
    for (const Premise& p : arg.premises())
      premises.push_back({{"statement", p.statement.value}, {"kind", to_string(p.kind)}});
    arguments.push_back({{"id", aid.value},
                         {"conclusion", arg.conclusion().value},
                         {"direction", to_string(arg.direction())},
                         {"premises", std::move(premises)},
                         {"weight", arg.weight().value()}});
  }
  doc["arguments"] = std::move(arguments);

  Json audience = Json::object();
  Json accepted = Json::array();
  for (const StatementId& s : cf.audience.accepted) accepted.push_back(s.value);
  Json rejected = Json::array();
  for (const StatementId& s : cf.audience.rejected) rejected.push_back(s.value);
  audience["accepted"] = std::move(accepted);
  audience["rejected"] = std::move(rejected);
  doc["audience"] = std::move(audience);

  Json proposals = Json::object();
  for (const DispositiveItem& item : cf.pleadings.items()) {
    Json body = Json::object();
    body["description"] = item.description;
    Json solutions = Json::array();
    for (const Proposal& p : cf.pleadings.proposals()) {
      if (p.item.id != item.id) continue;
      Json grounds = Json::array();
      for (const StatementId& g : p.solution.grounds) grounds.push_back(g.value);
      solutions.push_back({{"id", p.id},
                           {"by", p.agent == cf.pleadings.claimant() ? "claimant" : "defendant"},
                           {"conclusion", p.solution.conclusion.value},
                           {"grounds", std::move(grounds)}});
    }
    body["solutions"] = std::move(solutions);
    proposals[item.id] = std::move(body);
  }
  Json pleadings = Json::object();
  pleadings["claimant"] = cf.pleadings.claimant().name;
  pleadings["defendant"] = cf.pleadings.defendant().name;
  pleadings["proposals"] = std::move(proposals);
  doc["pleadings"] = std::move(pleadings);

  if (cf.award) {
    Json items = Json::array();
    for (const AwardItem& ai : cf.award->items()) {
      Json grounds = Json::array();
      for (const StatementId& g : ai.decision.grounds) grounds.push_back(g.value);
      Json addressed = Json::array();
      for (const std::string& ref : ai.addressed) addressed.push_back(ref);
      items.push_back({{"item", ai.item.id},
                       {"description", ai.item.description},
                       {"conclusion", ai.decision.conclusion.value},
                       {"grounds", std::move(grounds)},
                       {"public-issue", ai.public_issue},
                       {"parties-consulted", ai.parties_consulted},
                       {"addressed", std::move(addressed)}});
    }
    Json award = Json::object();
    award["items"] = std::move(items);
    doc["award"] = std::move(award);
  }

  return doc.dump(2) + "\n";
}

inline CaseFile load_case_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) raise(Errc::io_error, "cannot read '" + path + "'");
  return parse_case_file(buffer.str());
}

}  // namespace arguendo
