#include <map>

#include <json.hpp>

#include "instrseq/codegen.hpp"
#include "instrseq/error.hpp"
#include "instrseq/thread.hpp"

namespace instrseq {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const LinearSpec& spec) {
  ordered_json states = ordered_json::array();
  for (StateId i = 0; i < spec.size(); ++i) {
    const auto& eq = spec.state(i);
    ordered_json s;
    s["id"] = i;
    switch (eq.kind) {
      case Equation::Kind::S: s["kind"] = "S"; break;
      case Equation::Kind::D: s["kind"] = "D"; break;
      case Equation::Kind::Post:
        s["kind"] = "post";
        s["action"] = eq.action.name();
        s["true"] = eq.on_true;
        s["false"] = eq.on_false;
        break;
    }
    states.push_back(std::move(s));
  }
  ordered_json doc;
  doc["root"] = spec.root();
  doc["states"] = std::move(states);
  return doc.dump();
}

LinearSpec spec_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
  }
  auto fail = [](const std::string& why) -> ParseError { return ParseError(0, "spec JSON: " + why); };
  if (!doc.is_object() || !doc.contains("root") || !doc.contains("states") || !doc["states"].is_array()) {
    throw fail("expected an object with 'root' and 'states'");
  }
  auto read_id = [&](const nlohmann::json& v, const char* what) -> std::uint64_t {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw fail(std::string("'") + what + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
  };

  std::map<std::uint64_t, StateId> dense;
  const auto& states = doc["states"];
  for (const auto& s : states) {
    if (!s.is_object() || !s.contains("id")) throw fail("every state needs an 'id'");
    if (!dense.emplace(read_id(s["id"], "id"), dense.size()).second) throw fail("duplicate state id");
  }
  auto lookup = [&](const nlohmann::json& v, const char* what) {
    auto it = dense.find(read_id(v, what));
    if (it == dense.end()) throw fail(std::string("'") + what + "' refers to an unknown state");
    return it->second;
  };

  std::vector<Equation> eqs;
  for (const auto& s : states) {
    if (!s.contains("kind") || !s["kind"].is_string()) throw fail("every state needs a 'kind'");
    const auto kind = s["kind"].get<std::string>();
    if (kind == "S") {
      eqs.push_back(Equation::terminate());
    } else if (kind == "D") {
      eqs.push_back(Equation::deadlock());
    } else if (kind == "post") {
      if (!s.contains("action") || !s["action"].is_string() || !s.contains("true") || !s.contains("false")) {
        throw fail("post states need 'action', 'true' and 'false'");
      }
      eqs.push_back(Equation::post(Action(s["action"].get<std::string>()), lookup(s["true"], "true"),
                                   lookup(s["false"], "false")));
    } else {
      throw fail("unknown kind '" + kind + "'");
    }
  }
  if (eqs.empty()) throw fail("no states");
  return LinearSpec(std::move(eqs), lookup(doc["root"], "root"));
}

std::string to_json(const PsiReport& report) {
  ordered_json doc;
  doc["n"] = report.n;
  doc["maxLength"] = report.max_length;
  doc["distinctCount"] = report.distinct_count;
  doc["expectedDistinct"] = report.expected_distinct;
  return doc.dump();
}

}  // namespace instrseq
