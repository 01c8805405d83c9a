#include "argstr/io.hpp"

namespace argstr {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<ArgumentAttack> read_attacks(const json& arr) {
  if (!arr.is_array()) throw GraphError("\"attacks\" must be an array");
  std::vector<ArgumentAttack> out;
  for (const auto& a : arr) {
    if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a["from"].is_string() ||
        !a["to"].is_string())
      throw GraphError("each attack needs string fields \"from\" and \"to\"");
    ArgumentAttack at{a["from"].get<std::string>(), a["to"].get<std::string>(), 1.0};
    if (a.contains("weight")) {
      if (!a["weight"].is_number()) throw GraphError("attack weight must be a number");
      at.weight = a["weight"].get<double>();
    }
    out.push_back(std::move(at));
  }
  return out;
}

}  // namespace

WeightedArgumentationGraph parse_wag_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("arguments")) throw GraphError("expected an object with \"arguments\"");
  const auto& args = j["arguments"];
  if (!args.is_array()) throw GraphError("\"arguments\" must be an array");
  std::vector<GraphNode> nodes;
  for (const auto& a : args) {
    if (!a.is_object() || !a.contains("id") || !a["id"].is_string())
      throw GraphError("each argument needs a string \"id\"");
    GraphNode n{a["id"].get<std::string>(), 1.0};
    if (a.contains("weight")) {
      if (!a["weight"].is_number()) throw GraphError("argument weight must be a number");
      n.weight = a["weight"].get<double>();
    }
    nodes.push_back(std::move(n));
  }
  std::vector<GraphEdge> edges;
  if (j.contains("attacks"))
    for (auto& a : read_attacks(j["attacks"])) edges.push_back({a.from, a.to, a.weight});
  return WeightedArgumentationGraph(std::move(nodes), std::move(edges));
}

json wag_to_json(const WeightedArgumentationGraph& g) {
  json args = json::array(), atts = json::array();
  for (const auto& n : g.nodes()) args.push_back({{"id", n.id}, {"weight", n.weight}});
  for (const auto& e : g.edges()) atts.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
  return {{"arguments", args}, {"attacks", atts}};
}

std::vector<ArgumentAttack> parse_attacks_json(std::string_view text) {
  const json j = parse_json(text);
  if (j.is_object() && j.contains("attacks")) return read_attacks(j["attacks"]);
  return read_attacks(j);
}

json to_json(const Witness& w) {
  return {{"principle", to_string(w.principle)}, {"method", w.method},       {"theory", w.theory},
          {"arguments", w.arguments},            {"strengths", w.strengths}, {"detail", w.detail},
          {"source", w.source}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  auto p = principle_from_string(j.at("principle").get<std::string>());
  if (!p) throw std::invalid_argument("unknown principle in witness");
  w.principle = *p;
  w.method = j.at("method").get<std::string>();
  w.theory = j.at("theory").get<std::string>();
  w.arguments = j.at("arguments").get<std::vector<std::string>>();
  w.strengths = j.value("strengths", std::vector<double>{});
  w.detail = j.value("detail", "");
  w.source = j.value("source", "");
  return w;
}

json to_json(const PrincipleVerdict& v) {
  json j{{"principle", to_string(v.principle)},
         {"method", v.method},
         {"status", to_string(v.kind)},
         {"trials", v.trials},
         {"instances", v.instances},
         {"falsifications", v.falsifications},
         {"discrepancy", v.discrepancy()},
         {"agrees_with_table", v.agrees_with_table()}};
  j["expected"] = v.expected ? json{{"status", to_string(v.expected->status)}, {"theorem", v.expected->theorem}}
                             : json(nullptr);
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const WellBehavedVerdict& v) {
  json clauses = json::array();
  for (const auto& c : v.clauses) {
    json cj{{"clause", c.clause}, {"status", to_string(c.status)}, {"samples", c.samples}};
    if (!c.witness.empty()) cj["witness"] = c.witness;
    clauses.push_back(std::move(cj));
  }
  return {{"overall", to_string(v.overall)}, {"clauses", clauses}};
}

}  // namespace argstr
