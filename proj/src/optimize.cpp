#include "chordsieve/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

namespace chordsieve {

DisjointSets::DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

bool DisjointSets::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[static_cast<std::size_t>(x)] < size_[static_cast<std::size_t>(y)]) std::swap(x, y);
  parent_[static_cast<std::size_t>(y)] = x;
  size_[static_cast<std::size_t>(x)] += size_[static_cast<std::size_t>(y)];
  return true;
}

std::vector<double> singleton_probabilities(const EventSystem<double>& sys) {
  std::vector<double> out;
  for (int v = 0; v < sys.event_count(); ++v) out.push_back(intersection_prob(sys, {v}));
  return out;
}

double tree_weight(const WeightMatrix& w, const Graph& tree) {
  double total = 0.0;
  for (const auto& [u, v] : tree.edges()) total += w(u, v);
  return total;
}

double path_weight(const WeightMatrix& w, std::span<const int> order) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) total += w(order[i], order[i + 1]);
  return total;
}

double tree_bracket_value(std::span<const double> singles, const WeightMatrix& w, const Graph& tree) {
  return std::accumulate(singles.begin(), singles.end(), 0.0) - tree_weight(w, tree);
}

double tree_lower_value(std::span<const double> singles, const WeightMatrix& w, const Graph& tree) {
  return tree_bracket_value(singles, w, tree) / independence_number(tree);
}

Graph best_tree(const WeightMatrix& w, TreeObjective objective) {
  const int n = w.size();
  if (n < 1) throw DomainError("spanning tree needs at least one vertex");
  std::vector<Edge> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  // Lexicographic order is already in place; a stable sort by weight keeps it
  // as the tie-break.
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Edge& a, const Edge& b) {
    double wa = w(a.first, a.second);
    double wb = w(b.first, b.second);
    return objective == TreeObjective::minimize_weight ? wa < wb : wa > wb;
  });
  DisjointSets sets(n);
  std::vector<Edge> chosen;
  for (const auto& e : candidates) {
    if (sets.unite(e.first, e.second)) chosen.push_back(e);
    if (static_cast<int>(chosen.size()) == n - 1) break;
  }
  return Graph::build(n, chosen);
}

namespace {

PathResult held_karp(const WeightMatrix& w) {
  const int n = w.size();
  const std::size_t full = (std::size_t{1} << n) - 1;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // cost[mask * n + v]: cheapest Hamiltonian path of `mask` that starts at v.
  std::vector<double> cost((full + 1) * static_cast<std::size_t>(n), kInf);
  auto at = [&](std::size_t mask, int v) -> double& { return cost[mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]; };
  for (int v = 0; v < n; ++v) at(std::size_t{1} << v, v) = 0.0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1U) || mask == (std::size_t{1} << v)) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << v);
      double best = kInf;
      for (int u = 0; u < n; ++u)
        if ((rest >> u) & 1U) best = std::min(best, w(v, u) + at(rest, u));
      at(mask, v) = best;
    }
  }
  double optimum = kInf;
  for (int v = 0; v < n; ++v) optimum = std::min(optimum, at(full, v));
  const double tol = 1e-12 * std::max(1.0, std::abs(optimum));
  // Greedy lexicographic reconstruction among optimal continuations.
  PathResult result;
  result.optimal = true;
  std::size_t mask = full;
  double remaining = optimum;
  int current = -1;
  for (int step = 0; step < n; ++step) {
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1U)) continue;
      double via = current < 0 ? at(mask, v) : w(current, v) + at(mask, v);
      if (via <= remaining + tol) {
        remaining = at(mask, v);
        current = v;
        break;
      }
    }
    result.order.push_back(current);
    mask &= ~(std::size_t{1} << current);
  }
  result.total_weight = path_weight(w, result.order);
  return result;
}

std::vector<int> nearest_neighbor(const WeightMatrix& w, int start) {
  const int n = w.size();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> order{start};
  used[static_cast<std::size_t>(start)] = true;
  for (int step = 1; step < n; ++step) {
    int last = order.back();
    int next = -1;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)] && (next < 0 || w(last, v) < w(last, next))) next = v;
    used[static_cast<std::size_t>(next)] = true;
    order.push_back(next);
  }
  return order;
}

// Segment reversal on an open path; reversing order[i..j] replaces the edges
// entering i and leaving j.
void two_opt(const WeightMatrix& w, std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n - 1 && !improved; ++i) {
      for (int j = i + 1; j < n && !improved; ++j) {
        if (i == 0 && j == n - 1) continue;
        double before = 0.0;
        double after = 0.0;
        if (i > 0) {
          before += w(order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(i)]);
          after += w(order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(j)]);
        }
        if (j < n - 1) {
          before += w(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j + 1)]);
          after += w(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j + 1)]);
        }
        if (after < before - 1e-15) {
          std::reverse(order.begin() + i, order.begin() + j + 1);
          improved = true;
        }
      }
    }
  }
}

std::vector<int> canonical_direction(std::vector<int> order) {
  if (order.size() > 1 && order.front() > order.back()) std::reverse(order.begin(), order.end());
  return order;
}

PathResult heuristic_path(const WeightMatrix& w) {
  const int n = w.size();
  std::vector<PathResult> per_start(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < n; ++s) {
    auto order = nearest_neighbor(w, s);
    two_opt(w, order);
    order = canonical_direction(std::move(order));
    per_start[static_cast<std::size_t>(s)] = PathResult{order, path_weight(w, order), false};
  }
  // Deterministic reduction: lowest weight, then lexicographic order.
  PathResult best = per_start.front();
  for (const auto& r : per_start)
    if (std::tie(r.total_weight, r.order) < std::tie(best.total_weight, best.order)) best = r;
  return best;
}

}  // namespace

PathResult best_path(const WeightMatrix& w, PathMode mode) {
  const int n = w.size();
  if (n < 1) throw DomainError("path needs at least one vertex");
  if (n == 1) return PathResult{{0}, 0.0, true};
  if (mode == PathMode::exact) {
    if (n > kMaxExactPathVertices)
      throw LimitError("exact Hamiltonian path is limited to " + std::to_string(kMaxExactPathVertices) + " vertices");
    return held_karp(w);
  }
  return heuristic_path(w);
}

Graph tree_from_pruefer(int n, std::span<const int> sequence) {
  if (n < 1) throw DomainError("tree needs at least one vertex");
  if (n == 1) return Graph::build(1, std::span<const Edge>{});
  if (static_cast<int>(sequence.size()) != n - 2) throw DomainError("Prüfer sequence must have length n - 2");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw DomainError("Prüfer entry out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, x);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  return Graph::build(n, edges);
}

TreeResult exhaustive_tree_oracle(std::span<const double> singles, const WeightMatrix& w, TreeCriterion criterion) {
  const int n = w.size();
  if (n < 1) throw DomainError("tree search needs at least one vertex");
  if (n > kMaxExhaustiveTreeVertices)
    throw LimitError("exhaustive tree search is limited to " + std::to_string(kMaxExhaustiveTreeVertices) + " vertices");
  auto score = [&](const Graph& t) {
    return criterion == TreeCriterion::max_tree_lower ? tree_lower_value(singles, w, t) : tree_bracket_value(singles, w, t);
  };
  auto better = [&](double a, double b) { return criterion == TreeCriterion::max_tree_lower ? a > b : a < b; };
  std::vector<int> seq(static_cast<std::size_t>(std::max(n - 2, 0)), 0);
  std::optional<TreeResult> best;
  while (true) {
    Graph t = tree_from_pruefer(n, seq);
    double s = score(t);
    if (!best || better(s, best->objective)) best = TreeResult{std::move(t), s};
    // Odometer increment over {0..n-1}^(n-2).
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return *best;
}

TreeResult exhaustive_tree_oracle(const EventSystem<double>& sys, TreeCriterion criterion) {
  if (sys.event_count() > kMaxExhaustiveTreeVertices)
    throw LimitError("exhaustive tree search is limited to " + std::to_string(kMaxExhaustiveTreeVertices) + " vertices");
  auto singles = singleton_probabilities(sys);
  return exhaustive_tree_oracle(singles, pairwise_weights(sys), criterion);
}

std::string_view to_string(TreeObjective objective) {
  return objective == TreeObjective::minimize_weight ? "minimize-weight" : "maximize-weight";
}

std::string_view to_string(PathMode mode) { return mode == PathMode::exact ? "exact" : "heuristic"; }

std::string_view to_string(TreeCriterion criterion) {
  return criterion == TreeCriterion::max_tree_lower ? "max-tree-lower" : "min-hunter-upper";
}

}  // namespace chordsieve
