#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <type_traits>
#include <vector>

#include "chordsieve/errors.hpp"
#include "chordsieve/event_system.hpp"
#include "chordsieve/graph.hpp"

namespace chordsieve {

// Symmetric pairwise weights w(u, v) = Pr(A_u ∩ A_v); the diagonal is unused.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(int n) : n_(n), w_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  int size() const { return n_; }
  double operator()(int u, int v) const { return w_[index(u, v)]; }
  void set(int u, int v, double value) {
    w_[index(u, v)] = value;
    w_[index(v, u)] = value;
  }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  int n_ = 0;
  std::vector<double> w_;
};

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  // False when x and y were already joined.
  bool unite(int x, int y);

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

enum class TreeObjective { minimize_weight, maximize_weight };
enum class PathMode { exact, heuristic };
enum class TreeCriterion { max_tree_lower, min_hunter_upper };

inline constexpr int kMaxExactPathVertices = 15;
inline constexpr int kMaxExhaustiveTreeVertices = 7;

struct PathResult {
  std::vector<int> order;
  double total_weight = 0.0;
  bool optimal = false;
};

struct TreeResult {
  Graph tree;
  double objective = 0.0;
};

template <ValueDomain V>
WeightMatrix pairwise_weights(const EventSystem<V>& sys) {
  if constexpr (!std::is_same_v<V, double>) {
    throw DomainError(std::string("pairwise weights need the real backend, not ") + ValueTraits<V>::name);
  } else {
    const int n = sys.event_count();
    WeightMatrix w(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) w.set(u, v, intersection_prob(sys, {u, v}));
    return w;
  }
}

std::vector<double> singleton_probabilities(const EventSystem<double>& sys);

double tree_weight(const WeightMatrix& w, const Graph& tree);
double path_weight(const WeightMatrix& w, std::span<const int> order);

// Hunter's bracket sum Pr(A_v) - sum over tree edges of w.
double tree_bracket_value(std::span<const double> singles, const WeightMatrix& w, const Graph& tree);
// The tree lower bound with the tree's own independence number.
double tree_lower_value(std::span<const double> singles, const WeightMatrix& w, const Graph& tree);

// Kruskal. Edges are scanned by weight, ties in lexicographic (u, v) order.
// minimize_weight maximizes the (n-1)-denominator lower bound;
// maximize_weight minimizes Hunter's upper bound.
Graph best_tree(const WeightMatrix& w, TreeObjective objective);

// exact: Held-Karp over subsets (n <= 15); among optimal paths the
// lexicographically smallest order is returned. heuristic: nearest neighbor
// from every start plus 2-opt, not guaranteed optimal.
PathResult best_path(const WeightMatrix& w, PathMode mode);

// Enumerates all n^(n-2) labeled trees via Prüfer sequences (n <= 7).
TreeResult exhaustive_tree_oracle(std::span<const double> singles, const WeightMatrix& w, TreeCriterion criterion);
TreeResult exhaustive_tree_oracle(const EventSystem<double>& sys, TreeCriterion criterion);

// Tree with n vertices decoded from a Prüfer sequence of length n - 2.
Graph tree_from_pruefer(int n, std::span<const int> sequence);

std::string_view to_string(TreeObjective objective);
std::string_view to_string(PathMode mode);
std::string_view to_string(TreeCriterion criterion);

}  // namespace chordsieve
