#include "chordsieve/reliability.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <fmt/format.h>

namespace chordsieve {

void Network::validate() const {
  if (node_count < 2) throw DomainError("network needs at least two nodes");
  auto in_range = [&](int v) { return v >= 0 && v < node_count; };
  if (!in_range(source) || !in_range(terminal)) throw DomainError("source or terminal out of range");
  if (source == terminal) throw DomainError("source and terminal must differ");
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (!in_range(a.tail) || !in_range(a.head))
      throw DomainError("arc " + std::to_string(i + 1) + " has an endpoint out of range");
    if (a.tail == a.head) throw DomainError("arc " + std::to_string(i + 1) + " is a loop");
    if (!seen.emplace(a.tail, a.head).second) throw DomainError("arc " + std::to_string(i + 1) + " is a duplicate");
  }
  if (arc_reliability) {
    if (arc_reliability->size() != arcs.size()) throw DomainError("need one reliability per arc");
    for (double p : *arc_reliability)
      if (!(p >= 0.0 && p <= 1.0)) throw DomainError("arc reliability outside [0,1]");
  }
}

Network appendix_network() {
  enum { s, a, b, t };
  return Network{4, {{s, a}, {s, b}, {a, b}, {b, a}, {a, t}, {b, t}}, s, t, std::nullopt};
}

std::vector<int> StPath::arc_set() const {
  std::vector<int> out = arcs;
  std::sort(out.begin(), out.end());
  return out;
}

std::string StPath::label() const {
  // Single-digit ids are concatenated ("136"); otherwise dash separated.
  const bool compact = std::all_of(arcs.begin(), arcs.end(), [](int a) { return a < 9; });
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i && !compact) out += '-';
    out += std::to_string(arcs[i] + 1);
  }
  return out;
}

std::vector<StPath> enumerate_st_paths(const Network& net) {
  net.validate();
  std::vector<std::vector<int>> out_arcs(static_cast<std::size_t>(net.node_count));
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    out_arcs[static_cast<std::size_t>(net.arcs[i].tail)].push_back(static_cast<int>(i));
  std::vector<StPath> paths;
  std::vector<bool> on_path(static_cast<std::size_t>(net.node_count), false);
  std::vector<int> current;
  auto dfs = [&](auto&& self, int node) -> void {
    if (node == net.terminal) {
      paths.push_back(StPath{current});
      return;
    }
    on_path[static_cast<std::size_t>(node)] = true;
    for (int arc : out_arcs[static_cast<std::size_t>(node)]) {
      int next = net.arcs[static_cast<std::size_t>(arc)].head;
      if (on_path[static_cast<std::size_t>(next)]) continue;
      current.push_back(arc);
      self(self, next);
      current.pop_back();
    }
    on_path[static_cast<std::size_t>(node)] = false;
  };
  dfs(dfs, net.source);
  std::sort(paths.begin(), paths.end(), [](const StPath& x, const StPath& y) {
    return std::make_tuple(x.arcs.front(), x.arcs.back(), x.arcs.size(), std::cref(x.arcs)) <
           std::make_tuple(y.arcs.front(), y.arcs.back(), y.arcs.size(), std::cref(y.arcs));
  });
  return paths;
}

EventSystem<Polynomial> symbolic_path_event_system(const Network& net) {
  return path_event_system<Polynomial>(net, Polynomial::variable());
}

EventSystem<double> numeric_path_event_system(const Network& net) {
  if (!net.arc_reliability) throw DomainError("network has symbolic reliabilities");
  return path_event_system<double>(net, std::span<const double>(*net.arc_reliability));
}

Polynomial exact_reliability_polynomial(const Network& net) {
  std::vector<Polynomial> probs(net.arcs.size(), Polynomial::variable());
  return exact_reliability<Polynomial>(net, probs);
}

double exact_reliability_numeric(const Network& net) {
  if (!net.arc_reliability) throw DomainError("network has symbolic reliabilities");
  return exact_reliability<double>(net, std::span<const double>(*net.arc_reliability));
}

std::vector<NamedPolynomial> bound_polynomials(const Network& net) {
  std::vector<NamedPolynomial> out;
  out.push_back({"exact", exact_reliability_polynomial(net)});
  if (enumerate_st_paths(net).empty()) return out;
  auto sys = symbolic_path_event_system(net);
  const int n = sys.event_count();
  Graph chain = path_graph(n);
  out.push_back({"hunter-lower", hunter_lower_tree(sys, chain).value});
  out.push_back({"kwerel-lower", kwerel_lower(sys).value});
  out.push_back({"bonferroni-lower", classical_bonferroni(sys, 1, Direction::lower).value});
  out.push_back({"hunter-upper", hunter_upper_tree(sys, chain).value});
  out.push_back({"kwerel-upper", kwerel_upper(sys).value});
  out.push_back({"bonferroni-upper", classical_bonferroni(sys, 1, Direction::upper).value});
  if (n >= 3) out.push_back({"kwerel2-lower", kwerel2_lower(sys).value});
  return out;
}

std::vector<Rational> parse_sweep_grid(std::string_view grid_text) {
  auto first = grid_text.find(':');
  auto second = first == std::string_view::npos ? first : grid_text.find(':', first + 1);
  if (second == std::string_view::npos || grid_text.find(':', second + 1) != std::string_view::npos)
    throw ParseError("sweep grid must look like a:b:step, got '" + std::string(grid_text) + "'");
  Rational lo = parse_rational(grid_text.substr(0, first));
  Rational hi = parse_rational(grid_text.substr(first + 1, second - first - 1));
  Rational step = parse_rational(grid_text.substr(second + 1));
  if (step <= 0) throw DomainError("sweep step must be positive");
  if (hi < lo) throw DomainError("sweep end is below its start");
  std::vector<Rational> grid;
  for (Rational p = lo; p <= hi; p += step) grid.push_back(p);
  return grid;
}

SweepTable sweep(const Network& net, std::span<const Rational> p_values, std::span<const std::string> bound_ids) {
  for (const auto& p : p_values)
    if (p < 0 || p > 1) throw DomainError("sweep value p = " + to_short_string(p) + " outside [0,1]");
  auto polys = bound_polynomials(net);
  std::vector<const Polynomial*> selected{&polys.front().value};
  SweepTable table;
  table.columns = {"p", "exact"};
  for (const auto& id : bound_ids) {
    parse_bound_kind(id);
    auto it = std::find_if(polys.begin(), polys.end(), [&](const NamedPolynomial& np) { return np.id == id; });
    if (it == polys.end() || id == "exact") throw DomainError("bound '" + id + "' is not available for this network");
    selected.push_back(&it->value);
    table.columns.push_back(id);
  }
  table.rows.assign(p_values.size(), {});
  const auto count = static_cast<std::ptrdiff_t>(p_values.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Rational& p = p_values[static_cast<std::size_t>(i)];
    std::vector<Rational> row{p};
    for (const Polynomial* poly : selected) row.push_back(poly->evaluate(p));
    table.rows[static_cast<std::size_t>(i)] = std::move(row);
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      double v = to_double(row[c]);
      if (v == 0.0) v = 0.0;  // no "-0"
      out += fmt::format("{:.12g}", v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace chordsieve
