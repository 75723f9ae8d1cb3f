#pragma once

#include <string>
#include <string_view>
#include <type_traits>

#include <json.hpp>

#include "chordsieve/bounds.hpp"
#include "chordsieve/event_system.hpp"
#include "chordsieve/graph.hpp"
#include "chordsieve/optimize.hpp"
#include "chordsieve/polynomial.hpp"
#include "chordsieve/rational.hpp"
#include "chordsieve/reliability.hpp"

namespace chordsieve::io {

using Json = nlohmann::json;

// Parses JSON text, mapping library exceptions to ParseError.
Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

// Graph text: "n m" followed by m lines "u v" (0-based).
// Graph JSON: {"vertices": n, "edges": [[u, v], ...]}.
// The format is detected from the first non-blank character.
Graph parse_graph(std::string_view text);
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
std::string graph_to_text(const Graph& g);

// Scalar values: JSON numbers or "num/den" / decimal strings.
template <class V>
V value_from_json(const Json& j);

template <>
double value_from_json<double>(const Json& j);
template <>
Rational value_from_json<Rational>(const Json& j);

// double → number; Rational → "num/den"; Polynomial → "c0 c1 ..." list.
Json value_to_json(double v);
Json value_to_json(const Rational& v);
Json value_to_json(const Polynomial& v);

// {"weights": [...], "events": [[outcome ids], ...]} or
// {"coords": m, "probs": [...], "events": [[coordinate ids], ...]}.
template <class V>
EventSystem<V> event_system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("events")) throw ParseError("event system JSON needs an \"events\" array");
  std::vector<std::vector<int>> events;
  try {
    events = j.at("events").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad \"events\": ") + e.what());
  }
  auto values = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("missing array \"") + key + "\"");
    std::vector<V> out;
    for (const auto& item : j.at(key)) out.push_back(value_from_json<V>(item));
    return out;
  };
  if (j.contains("weights")) return EventSystem<V>::from_outcomes(values("weights"), events);
  if (j.contains("probs")) {
    auto probs = values("probs");
    if (j.contains("coords") && j.at("coords").get<std::size_t>() != probs.size())
      throw ParseError("\"coords\" disagrees with the length of \"probs\"");
    return EventSystem<V>::bernoulli_product(probs, events);
  }
  throw ParseError("event system JSON needs \"weights\" or \"probs\"");
}

// {"nodes": n, "arcs": [[tail, head], ...], "s": id, "t": id,
//  "p": number | "symbolic" | [per-arc numbers]}
Network network_from_json(const Json& j);
Json network_to_json(const Network& net);

// {kind, direction, r, value, alpha_used, n, edges}; absent optionals are null.
template <ValueDomain V>
Json report_to_json(const BoundReport<V>& report) {
  Json j;
  j["kind"] = std::string(to_string(report.kind));
  j["direction"] = std::string(to_string(report.direction()));
  j["r"] = report.truncation ? Json(*report.truncation) : Json(nullptr);
  j["value"] = value_to_json(report.value);
  j["alpha_used"] = report.graph.alpha_used ? Json(*report.graph.alpha_used) : Json(nullptr);
  j["n"] = report.graph.n;
  j["edges"] = report.graph.edges ? Json(*report.graph.edges) : Json(nullptr);
  return j;
}

template <ValueDomain V>
BoundReport<V> report_from_json(const Json& j) {
  try {
    BoundKind kind = parse_bound_kind(j.at("kind").get<std::string>());
    if (j.at("direction").get<std::string>() != to_string(direction_of(kind)))
      throw ParseError("report direction does not match its kind");
    V value;
    if constexpr (std::is_same_v<V, Polynomial>)
      value = Polynomial::from_coefficient_string(j.at("value").get<std::string>());
    else
      value = value_from_json<V>(j.at("value"));
    BoundReport<V> r{value, kind, std::nullopt, GraphSummary{j.at("n").get<int>(), std::nullopt, std::nullopt}};
    if (!j.at("r").is_null()) r.truncation = j.at("r").get<int>();
    if (!j.at("alpha_used").is_null()) r.graph.alpha_used = j.at("alpha_used").get<int>();
    if (!j.at("edges").is_null()) r.graph.edges = j.at("edges").get<std::size_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
}

// {"tree_edges": [[u, v], ...], "objective_value", "mode", "optimal"}
Json tree_result_to_json(const Graph& tree, double objective_value, std::string_view mode, bool optimal);
// {"path_order": [...], "objective_value", "mode", "optimal"}
Json path_result_to_json(const PathResult& path, std::string_view mode);

}  // namespace chordsieve::io
