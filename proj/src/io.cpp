#include "chordsieve/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace chordsieve::io {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph graph_from_json(const Json& j) {
  try {
    int n = j.at("vertices").get<int>();
    auto pairs = j.at("edges").get<std::vector<std::array<int, 2>>>();
    std::vector<Edge> edges;
    for (const auto& p : pairs) edges.emplace_back(p[0], p[1]);
    return Graph::build(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
}

Graph parse_graph(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') return graph_from_json(parse_json(text));
  std::istringstream in{std::string(text)};
  long n = -1;
  long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("graph text must start with \"n m\"");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) throw ParseError("graph text: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string trailing;
  if (in >> trailing) throw ParseError("graph text: unexpected trailing data '" + trailing + "'");
  return Graph::build(static_cast<int>(n), edges);
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

std::string graph_to_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

template <>
double value_from_json<double>(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  throw ParseError("expected a number, got " + j.dump());
}

template <>
Rational value_from_json<Rational>(const Json& j) {
  // Numbers go through their shortest decimal text, so 0.1 reads as 1/10.
  if (j.is_number()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a number, got " + j.dump());
}

Json value_to_json(double v) { return Json(v); }
Json value_to_json(const Rational& v) { return Json(to_fraction_string(v)); }
Json value_to_json(const Polynomial& v) { return Json(v.to_coefficient_string()); }

Network network_from_json(const Json& j) {
  try {
    Network net;
    net.node_count = j.at("nodes").get<int>();
    for (const auto& a : j.at("arcs").get<std::vector<std::array<int, 2>>>()) net.arcs.push_back({a[0], a[1]});
    net.source = j.at("s").get<int>();
    net.terminal = j.at("t").get<int>();
    const Json& p = j.contains("p") ? j.at("p") : Json("symbolic");
    if (p.is_string()) {
      if (p.get<std::string>() != "symbolic") throw ParseError("\"p\" must be a number, an array or \"symbolic\"");
    } else if (p.is_number()) {
      net.arc_reliability = std::vector<double>(net.arcs.size(), p.get<double>());
    } else if (p.is_array()) {
      net.arc_reliability = p.get<std::vector<double>>();
    } else {
      throw ParseError("\"p\" must be a number, an array or \"symbolic\"");
    }
    net.validate();
    return net;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad network JSON: ") + e.what());
  }
}

Json network_to_json(const Network& net) {
  Json arcs = Json::array();
  for (const auto& a : net.arcs) arcs.push_back({a.tail, a.head});
  Json j{{"nodes", net.node_count}, {"arcs", arcs}, {"s", net.source}, {"t", net.terminal}};
  j["p"] = net.arc_reliability ? Json(*net.arc_reliability) : Json("symbolic");
  return j;
}

Json tree_result_to_json(const Graph& tree, double objective_value, std::string_view mode, bool optimal) {
  Json edges = Json::array();
  for (const auto& [u, v] : tree.edges()) edges.push_back({u, v});
  return Json{{"tree_edges", edges}, {"objective_value", objective_value}, {"mode", std::string(mode)}, {"optimal", optimal}};
}

Json path_result_to_json(const PathResult& path, std::string_view mode) {
  return Json{{"path_order", path.order},
              {"objective_value", path.total_weight},
              {"mode", std::string(mode)},
              {"optimal", path.optimal}};
}

}  // namespace chordsieve::io
