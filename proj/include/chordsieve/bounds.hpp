#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordsieve/cliques.hpp"
#include "chordsieve/errors.hpp"
#include "chordsieve/event_system.hpp"
#include "chordsieve/graph.hpp"
#include "chordsieve/kernels.hpp"
#include "chordsieve/rational.hpp"
#include "chordsieve/value_domain.hpp"

namespace chordsieve {

enum class BoundKind {
  bonferroni_upper,
  bonferroni_lower,
  chordal_upper,
  chordal_lower,
  chordal_lower_sharpened,
  hunter_upper,
  hunter_lower,
  path_lower,
  kwerel_lower,
  kwerel_upper,
  seneta_lower,
  seneta_upper,
  kwerel2_lower,
  generalized_lower,
};

enum class Direction { upper, lower };

std::string_view to_string(BoundKind kind);
std::string_view to_string(Direction direction);
// Throws ParseError for an unknown id.
BoundKind parse_bound_kind(std::string_view id);
Direction direction_of(BoundKind kind);
const std::vector<BoundKind>& all_bound_kinds();

// Whether a non-chordal graph is accepted by the clique-complex bounds.
// `unchecked` exists to reproduce the counterexamples where the lower bound
// fails.
enum class GraphCheck { require_chordal, unchecked };

// nullopt truncation means the whole clique complex.
using Truncation = std::optional<int>;

struct GraphSummary {
  int n = 0;
  std::optional<std::size_t> edges;   // absent for bounds not tied to one graph
  std::optional<int> alpha_used;      // the denominator of a lower bound
};

template <ValueDomain V>
struct BoundReport {
  V value;
  BoundKind kind;
  Truncation truncation;
  GraphSummary graph;

  Direction direction() const { return direction_of(kind); }
};

namespace detail {

template <ValueDomain V>
void require_matching(const EventSystem<V>& sys, const Graph& g) {
  if (sys.event_count() != g.vertex_count())
    throw DomainError("event count " + std::to_string(sys.event_count()) + " does not match vertex count " +
                      std::to_string(g.vertex_count()));
}

inline void require_chordal(const Graph& g, GraphCheck check) {
  if (check == GraphCheck::require_chordal && !is_chordal(g))
    throw DomainError("graph is not chordal; the clique-complex bounds require a chordal graph");
}

inline SizeCap cap_for(Truncation r, Direction direction) {
  if (!r) return std::nullopt;
  if (*r < 1) throw DomainError("truncation depth r must be at least 1");
  return direction == Direction::upper ? 2 * *r - 1 : 2 * *r;
}

inline int ceil_half(int n) { return (n + 1) / 2; }

// All k-subsets of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(std::span<const int>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

// S_k: sum of Pr(A_i1 ∩ ... ∩ A_ik) over all k-subsets; S_0 is defined as 1.
template <ValueDomain V>
V symmetric_sum(const EventSystem<V>& sys, int k) {
  if (k == 0) return ValueTraits<V>::one();
  V acc = ValueTraits<V>::zero();
  detail::for_each_subset(sys.event_count(), k, [&](std::span<const int> s) { acc = acc + intersection_prob(sys, s); });
  return acc;
}

// Sum over the cliques of g with at most `cap` vertices of
// (-1)^(|I|-1) Pr(∩_{i∈I} A_i). No chordality check.
template <ValueDomain V>
V signed_clique_sum(const EventSystem<V>& sys, const Graph& g, SizeCap cap = std::nullopt) {
  detail::require_matching(sys, g);
  CliqueComplex cc = clique_complex(g, cap);
  return kernels::parallel::signed_clique_sum<V>(sys.weights(), sys.events(), cc.cliques);
}

// Truncated inclusion-exclusion over every non-empty I ⊆ V: |I| <= 2r-1
// for the upper bound and |I| <= 2r for the lower bound.
template <ValueDomain V>
BoundReport<V> classical_bonferroni(const EventSystem<V>& sys, int r, Direction direction) {
  if (r < 1) throw DomainError("truncation depth r must be at least 1");
  const int n = sys.event_count();
  SizeCap cap = detail::cap_for(r, direction);
  V value = signed_clique_sum(sys, complete_graph(n), cap);
  BoundKind kind = direction == Direction::upper ? BoundKind::bonferroni_upper : BoundKind::bonferroni_lower;
  return {std::move(value), kind, r, GraphSummary{n, std::nullopt, std::nullopt}};
}

// Chordal graph sieve: inclusion-exclusion restricted to the clique complex.
template <ValueDomain V>
BoundReport<V> chordal_upper(const EventSystem<V>& sys, const Graph& g, Truncation r = std::nullopt,
                             GraphCheck check = GraphCheck::require_chordal) {
  detail::require_matching(sys, g);
  detail::require_chordal(g, check);
  V value = signed_clique_sum(sys, g, detail::cap_for(r, Direction::upper));
  return {std::move(value), BoundKind::chordal_upper, r, GraphSummary{g.vertex_count(), g.edge_count(), std::nullopt}};
}

// The clique-complex lower bound: the signed clique sum (truncated at 2r
// when r is given) divided by alpha(G), or by alpha'(G) when sharpened.
template <ValueDomain V>
BoundReport<V> chordal_lower(const EventSystem<V>& sys, const Graph& g, Truncation r = std::nullopt,
                             bool sharpened = false, GraphCheck check = GraphCheck::require_chordal) {
  detail::require_matching(sys, g);
  if (g.vertex_count() == 0) throw DomainError("lower bound needs a non-empty event collection");
  detail::require_chordal(g, check);
  const int denominator = sharpened ? alpha_prime(sys, g) : independence_number(g);
  V raw = signed_clique_sum(sys, g, detail::cap_for(r, Direction::lower));
  BoundKind kind = sharpened ? BoundKind::chordal_lower_sharpened : BoundKind::chordal_lower;
  return {ValueTraits<V>::divide(raw, denominator), kind, r,
          GraphSummary{g.vertex_count(), g.edge_count(), denominator}};
}

namespace detail {

template <ValueDomain V>
V tree_bracket(const EventSystem<V>& sys, const Graph& tree) {
  V acc = symmetric_sum(sys, 1);
  for (const auto& [u, v] : tree.edges()) acc = acc - intersection_prob(sys, {u, v});
  return acc;
}

template <ValueDomain V>
void require_tree(const EventSystem<V>& sys, const Graph& tree) {
  require_matching(sys, tree);
  if (!is_tree(tree)) throw DomainError("graph is not a tree");
}

}  // namespace detail

// Hunter's inequality: sum Pr(A_v) minus the pairwise terms along the tree.
template <ValueDomain V>
BoundReport<V> hunter_upper_tree(const EventSystem<V>& sys, const Graph& tree) {
  detail::require_tree(sys, tree);
  return {detail::tree_bracket(sys, tree), BoundKind::hunter_upper, std::nullopt,
          GraphSummary{tree.vertex_count(), tree.edge_count(), std::nullopt}};
}

// Hunter's bracket divided by alpha(tree).
template <ValueDomain V>
BoundReport<V> hunter_lower_tree(const EventSystem<V>& sys, const Graph& tree) {
  detail::require_tree(sys, tree);
  const int alpha = independence_number(tree);
  return {ValueTraits<V>::divide(detail::tree_bracket(sys, tree), alpha), BoundKind::hunter_lower, std::nullopt,
          GraphSummary{tree.vertex_count(), tree.edge_count(), alpha}};
}

// Tree bound along the path order[0] - order[1] - ..., alpha = ceil(n/2).
template <ValueDomain V>
BoundReport<V> path_lower(const EventSystem<V>& sys, std::span<const int> order) {
  const int n = sys.event_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  if (static_cast<int>(order.size()) != n) throw DomainError("path order must list every event exactly once");
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw DomainError("path order is not a permutation of the events");
    seen[static_cast<std::size_t>(v)] = true;
  }
  V acc = symmetric_sum(sys, 1);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) acc = acc - intersection_prob(sys, {order[i], order[i + 1]});
  const int alpha = detail::ceil_half(n);
  return {ValueTraits<V>::divide(acc, alpha), BoundKind::path_lower, std::nullopt,
          GraphSummary{n, static_cast<std::size_t>(n - 1), alpha}};
}

// Kwerel's upper bound S1 - (2/n) S2.
template <ValueDomain V>
BoundReport<V> kwerel_upper(const EventSystem<V>& sys) {
  const int n = sys.event_count();
  V value = symmetric_sum(sys, 1) - scaled(symmetric_sum(sys, 2), Rational(2, n));
  return {std::move(value), BoundKind::kwerel_upper, std::nullopt, GraphSummary{n, std::nullopt, std::nullopt}};
}

// (S1 - (2/n) S2) / ceil(n/2), the closed form of the mean path bound.
template <ValueDomain V>
BoundReport<V> kwerel_lower(const EventSystem<V>& sys) {
  const int n = sys.event_count();
  const int alpha = detail::ceil_half(n);
  V bracket = symmetric_sum(sys, 1) - scaled(symmetric_sum(sys, 2), Rational(2, n));
  return {ValueTraits<V>::divide(bracket, alpha), BoundKind::kwerel_lower, std::nullopt,
          GraphSummary{n, std::nullopt, alpha}};
}

namespace detail {

template <ValueDomain V>
V seneta_bracket(const EventSystem<V>& sys, int j, int k) {
  const int n = sys.event_count();
  if (j < 0 || j >= n || k < 0 || k >= n)
    throw DomainError("seneta indices (" + std::to_string(j) + "," + std::to_string(k) + ") out of range");
  const int delta = j == k ? 1 : 0;
  if (n <= 2 - delta) throw DomainError("seneta bound needs n > 2 - delta_jk");
  V acc = symmetric_sum(sys, 1);
  for (int i = 0; i < n; ++i)
    if (i != j) acc = acc - intersection_prob(sys, {i, j});
  for (int i = 0; i < n; ++i)
    if (i != j && i != k) acc = acc - intersection_prob(sys, {i, k}) + intersection_prob(sys, {i, j, k});
  return acc;
}

}  // namespace detail

// Seneta's upper bound (the bracket without a denominator).
template <ValueDomain V>
BoundReport<V> seneta_upper(const EventSystem<V>& sys, int j, int k) {
  const int n = sys.event_count();
  return {detail::seneta_bracket(sys, j, k), BoundKind::seneta_upper, std::nullopt,
          GraphSummary{n, std::nullopt, std::nullopt}};
}

// Seneta-type lower bound: the bracket over n - 2 + delta_jk. Agrees with
// chordal_lower on K_{2-delta} * L_{n-2+delta} with j, k on the complete side.
template <ValueDomain V>
BoundReport<V> seneta_lower(const EventSystem<V>& sys, int j, int k) {
  const int n = sys.event_count();
  V bracket = detail::seneta_bracket(sys, j, k);
  const int denominator = n - 2 + (j == k ? 1 : 0);
  const std::size_t edges = j == k ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(2 * n - 3);
  return {ValueTraits<V>::divide(bracket, denominator), BoundKind::seneta_lower, std::nullopt,
          GraphSummary{n, edges, denominator}};
}

// Mean of the Seneta-type bound over distinct (j, k), in closed form.
template <ValueDomain V>
BoundReport<V> kwerel2_lower(const EventSystem<V>& sys) {
  const int n = sys.event_count();
  if (n < 3) throw DomainError("kwerel2 bound needs at least 3 events");
  const Rational pairs = binomial(n, 2);
  V bracket = symmetric_sum(sys, 1) - scaled(symmetric_sum(sys, 2), Rational(2 * n - 3) / pairs) +
              scaled(symmetric_sum(sys, 3), Rational(3) / pairs);
  return {ValueTraits<V>::divide(bracket, n - 2), BoundKind::kwerel2_lower, std::nullopt,
          GraphSummary{n, std::nullopt, n - 2}};
}

// Coefficient of S_k inside the bracket of the generalized bound, for
// 1 <= k <= m + 1 (sign included).
Rational generalized_coefficient(int n, int m, int k);

// Closed-form mean of chordal_lower over the graphs G_M, |M| = m
// (complete on M joined with edgeless on the complement); 0 <= m <= n-1.
template <ValueDomain V>
BoundReport<V> generalized_lower(const EventSystem<V>& sys, int m) {
  const int n = sys.event_count();
  if (m < 0 || m > n - 1) throw DomainError("generalized bound needs 0 <= m <= n-1");
  V bracket = ValueTraits<V>::zero();
  for (int k = 1; k <= m + 1; ++k) bracket = bracket + scaled(symmetric_sum(sys, k), generalized_coefficient(n, m, k));
  return {ValueTraits<V>::divide(bracket, n - m), BoundKind::generalized_lower, std::nullopt,
          GraphSummary{n, std::nullopt, n - m}};
}

// The defining construction of generalized_lower: the literal mean of
// chordal_lower over every G_M. Exponential in n; used to cross-check the
// closed form.
template <ValueDomain V>
V generalized_lower_by_averaging(const EventSystem<V>& sys, int m) {
  const int n = sys.event_count();
  if (m < 0 || m > n - 1) throw DomainError("generalized bound needs 0 <= m <= n-1");
  V total = ValueTraits<V>::zero();
  std::int64_t count = 0;
  detail::for_each_subset(n, m, [&](std::span<const int> subset) {
    total = total + chordal_lower(sys, complete_on_subset(n, subset)).value;
    ++count;
  });
  return ValueTraits<V>::divide(total, count);
}

}  // namespace chordsieve
