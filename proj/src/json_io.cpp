#include "ag/json_io.hpp"

namespace ag {

nlohmann::json to_json(const Magma& m) {
  return nlohmann::json::parse(serialize_magma(m, TableFormat::Json));
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json j;
  j["is_left_invertive"] = r.is_left_invertive;
  j["is_medial"] = r.is_medial;
  j["is_paramedial"] = r.is_paramedial;
  j["satisfies_law4"] = r.satisfies_law4;
  j["is_ag_star"] = r.is_ag_star;
  j["satisfies_permutation_identity"] = r.satisfies_permutation_identity;
  j["is_commutative"] = r.is_commutative;
  j["is_associative"] = r.is_associative;
  j["left_identities"] = r.left_identities;
  j["right_identities"] = r.right_identities;
  j["square"] = r.square.to_vector();
  j["s_equals_s2"] = r.s_equals_s2;
  return j;
}

nlohmann::json to_json(const ClassReport& r) {
  nlohmann::json classes;
  for (ClassKind kind : kAllClassKinds) {
    const ClassStatus& status = r[kind];
    nlohmann::json entry;
    entry["global"] = status.holds_globally;
    nlohmann::json witnesses = nlohmann::json::object();
    for (std::size_t a = 0; a < status.witnesses.size(); ++a)
      if (status.witnesses[a]) witnesses[std::to_string(a)] = status.witnesses[a]->params;
    entry["witnesses"] = std::move(witnesses);
    if (status.first_failing) entry["first_failing"] = *status.first_failing;
    classes[std::string(class_kind_name(kind))] = std::move(entry);
  }
  return nlohmann::json{{"classes", std::move(classes)}};
}

nlohmann::json to_json(const PropertyResult& r, bool include_elapsed) {
  nlohmann::json j;
  j["property"] = r.property_id;
  j["universe"] = r.universe;
  j["checked"] = r.checked;
  j["passed"] = r.passed();
  j["violation_count"] = r.violation_count;
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : r.violations) {
    nlohmann::json entry;
    entry["magma"] = to_json(v.magma);
    if (v.element) entry["element"] = *v.element;
    entry["detail"] = v.detail;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  if (include_elapsed) j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

nlohmann::json to_json(const HarnessReport& r, bool include_elapsed) {
  nlohmann::json j;
  nlohmann::json props = nlohmann::json::object();
  for (const PropertyResult& p : r.pass_fail) props[p.property_id] = to_json(p, include_elapsed);
  j["properties"] = std::move(props);
  if (!r.exploratory.empty() || !r.searches.empty()) {
    nlohmann::json expl = nlohmann::json::object();
    for (const PropertyResult& p : r.exploratory)
      expl[p.property_id] = to_json(p, include_elapsed);
    for (const SearchResult& s : r.searches) {
      nlohmann::json entry;
      entry["note"] = s.note;
      if (s.witness) entry["witness"] = to_json(*s.witness);
      expl[s.property_id] = std::move(entry);
    }
    j["exploratory"] = std::move(expl);
  }
  j["all_passed"] = r.all_passed();
  return j;
}

nlohmann::json to_json(const ReplayReport& r) {
  nlohmann::json j;
  j["chain"] = r.chain;
  j["passed"] = r.passed;
  nlohmann::json steps = nlohmann::json::array();
  for (const StepReport& s : r.steps) {
    nlohmann::json entry;
    entry["index"] = s.index;
    entry["ok"] = s.ok;
    if (s.justification) {
      entry["source"] = s.justification->source;
      entry["position"] = position_to_string(s.justification->position);
      entry["direction"] = std::string(direction_name(s.justification->direction));
    }
    if (!s.message.empty()) entry["message"] = s.message;
    steps.push_back(std::move(entry));
  }
  j["steps"] = std::move(steps);
  return j;
}

}  // namespace ag
