#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordsieve/bounds.hpp"
#include "chordsieve/event_system.hpp"
#include "chordsieve/polynomial.hpp"
#include "chordsieve/rational.hpp"

namespace chordsieve {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed network with perfectly reliable nodes and independently failing
// arcs. Arc ids are the 0-based positions in `arcs`; reports show them
// 1-based. An empty `arc_reliability` means every arc operates with the
// common symbolic probability p.
struct Network {
  int node_count = 0;
  std::vector<Arc> arcs;
  int source = 0;
  int terminal = 0;
  std::optional<std::vector<double>> arc_reliability;

  // Throws DomainError on s == t, out-of-range nodes, loops or duplicate arcs,
  // or reliabilities outside [0,1].
  void validate() const;
  bool symbolic() const { return !arc_reliability.has_value(); }
};

// Four nodes s, a, b, t (0..3) and arcs 1:s→a 2:s→b 3:a→b 4:b→a 5:a→t 6:b→t.
Network appendix_network();

// A simple directed s-t path as its arcs in traversal order.
struct StPath {
  std::vector<int> arcs;

  // Ascending arc ids.
  std::vector<int> arc_set() const;
  // 1-based arc ids concatenated, e.g. "136".
  std::string label() const;
};

// All simple s-t paths ordered by (first arc, last arc, length, arc
// sequence); for the appendix network this gives 15, 136, 245, 26.
std::vector<StPath> enumerate_st_paths(const Network& net);

// Event i: every arc of path i operates. Outcomes are the 2^|arcs| arc
// state vectors.
template <ValueDomain V>
EventSystem<V> path_event_system(const Network& net, std::span<const V> arc_probs) {
  net.validate();
  if (arc_probs.size() != net.arcs.size()) throw DomainError("need one reliability per arc");
  std::vector<std::vector<int>> defs;
  for (const auto& path : enumerate_st_paths(net)) defs.push_back(path.arc_set());
  if (defs.empty()) throw DomainError("source and terminal are not connected; no path events");
  return EventSystem<V>::bernoulli_product(std::vector<V>(arc_probs.begin(), arc_probs.end()), defs);
}

// Common reliability p for every arc.
template <ValueDomain V>
EventSystem<V> path_event_system(const Network& net, const V& p) {
  std::vector<V> probs(net.arcs.size(), p);
  return path_event_system<V>(net, std::span<const V>(probs));
}

EventSystem<Polynomial> symbolic_path_event_system(const Network& net);
EventSystem<double> numeric_path_event_system(const Network& net);

// R_st(N). Zero when no s-t path exists.
template <ValueDomain V>
V exact_reliability(const Network& net, std::span<const V> arc_probs) {
  if (enumerate_st_paths(net).empty()) return ValueTraits<V>::zero();
  return union_prob_exact(path_event_system<V>(net, arc_probs));
}

Polynomial exact_reliability_polynomial(const Network& net);
double exact_reliability_numeric(const Network& net);

struct NamedPolynomial {
  std::string id;
  Polynomial value;
};

// "exact" first, then hunter-lower (path graph in path order), kwerel-lower,
// bonferroni-lower (r = 1), hunter-upper, kwerel-upper, bonferroni-upper
// (r = 1) and, with at least three paths, kwerel2-lower.
std::vector<NamedPolynomial> bound_polynomials(const Network& net);

// Grid "a:b:step" parsed exactly: a, a+step, ... while <= b.
std::vector<Rational> parse_sweep_grid(std::string_view grid_text);

struct SweepTable {
  std::vector<std::string> columns;         // "p", "exact", then the bound ids
  std::vector<std::vector<Rational>> rows;  // exact values, one row per p
};

// Evaluates the exact polynomials at every p (each in [0,1]). Rows keep the
// input order.
SweepTable sweep(const Network& net, std::span<const Rational> p_values, std::span<const std::string> bound_ids);

// CSV with '.' decimals and 12 significant digits.
std::string to_csv(const SweepTable& table);

}  // namespace chordsieve
