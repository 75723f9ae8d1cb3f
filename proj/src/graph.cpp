#include "chordsieve/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "chordsieve/errors.hpp"

namespace chordsieve {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph Graph::build(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) throw DomainError("negative vertex count " + std::to_string(vertex_count));
  Graph g;
  g.n_ = vertex_count;
  g.adj_.assign(static_cast<std::size_t>(vertex_count), {});
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.first < 0 || raw.second < 0 || raw.first >= vertex_count || raw.second >= vertex_count)
      throw DomainError("edge " + pair_text(raw) + " has an endpoint outside 0.." +
                        std::to_string(vertex_count - 1));
    if (raw.first == raw.second) throw DomainError("self-loop " + pair_text(raw));
    g.edges_.emplace_back(std::min(raw.first, raw.second), std::max(raw.first, raw.second));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
    throw DomainError("duplicate edge " + pair_text(*dup));
  for (const auto& [u, v] : g.edges_) {
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

EliminationOrder mcs_order(const Graph& g) {
  const int n = g.vertex_count();
  // Bucket queue keyed by the number of already visited neighbors.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n) + 1);
  for (int v = n - 1; v >= 0; --v) buckets[0].push_back(v);
  // Each bucket is kept as a stack; stale entries are skipped lazily. To honor
  // the smallest-index tie-break we scan the top bucket for its minimum live
  // vertex instead of popping blindly.
  EliminationOrder result;
  result.order.reserve(static_cast<std::size_t>(n));
  int top = 0;
  for (int step = 0; step < n; ++step) {
    int chosen = -1;
    while (chosen < 0) {
      auto& bucket = buckets[static_cast<std::size_t>(top)];
      std::erase_if(bucket, [&](int v) {
        return visited[static_cast<std::size_t>(v)] || weight[static_cast<std::size_t>(v)] != top;
      });
      if (bucket.empty()) {
        --top;
        continue;
      }
      chosen = *std::min_element(bucket.begin(), bucket.end());
    }
    visited[static_cast<std::size_t>(chosen)] = true;
    result.order.push_back(chosen);
    for (int w : g.neighbors(chosen)) {
      auto& wt = weight[static_cast<std::size_t>(w)];
      if (visited[static_cast<std::size_t>(w)]) continue;
      ++wt;
      buckets[static_cast<std::size_t>(wt)].push_back(w);
      top = std::max(top, wt);
    }
  }
  return result;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const int> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0) return false;
    pos[static_cast<std::size_t>(v)] = i;
  }
  // Classic check: the later neighbors of v minus its earliest later
  // neighbor u must all be adjacent to u.
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    for (int w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
          (parent < 0 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(parent)]))
        parent = w;
    if (parent < 0) continue;
    for (int w : g.neighbors(v))
      if (w != parent && pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
          !g.adjacent(parent, w))
        return false;
  }
  return true;
}

std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
  std::vector<int> order = mcs_order(g).order;
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_order(g, order)) return std::nullopt;
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

int connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
  }
  return components;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && static_cast<int>(g.edge_count()) == g.vertex_count() - 1 &&
         connected_components(g) == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  if (s.empty()) throw DomainError("induced subgraph of an empty vertex set");
  InducedSubgraph result;
  result.original.assign(s.begin(), s.end());
  std::sort(result.original.begin(), result.original.end());
  result.original.erase(std::unique(result.original.begin(), result.original.end()), result.original.end());
  for (int v : result.original)
    if (v < 0 || v >= g.vertex_count())
      throw DomainError("vertex " + std::to_string(v) + " out of range");
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < result.original.size(); ++i)
    local[static_cast<std::size_t>(result.original[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    int a = local[static_cast<std::size_t>(u)];
    int b = local[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  result.graph = Graph::build(static_cast<int>(result.original.size()), edges);
  return result;
}

std::vector<int> chordal_maximum_independent_set(const Graph& g) {
  auto peo = perfect_elimination_order(g);
  if (!peo) throw DomainError("graph is not chordal");
  // A vertex simplicial in the remaining graph lies in some maximum
  // independent set, so taking it and deleting its neighbors is optimal.
  std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<int> chosen;
  for (int v : *peo) {
    if (removed[static_cast<std::size_t>(v)]) continue;
    chosen.push_back(v);
    for (int w : g.neighbors(v)) removed[static_cast<std::size_t>(w)] = true;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

using Mask = std::uint64_t;

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : adj_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
      adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
  }

  int run(Mask all) {
    best_ = 0;
    search(all, 0);
    return best_;
  }

 private:
  void search(Mask remaining, int size) {
    // Vertices of degree <= 1 in the remaining graph can always be taken.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask m = remaining; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (std::popcount(adj_[static_cast<std::size_t>(v)] & remaining) <= 1) {
          remaining &= ~(adj_[static_cast<std::size_t>(v)] | (Mask{1} << v));
          ++size;
          changed = true;
          break;
        }
      }
    }
    if (remaining == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + std::popcount(remaining) <= best_) return;
    int pivot = -1;
    int pivot_degree = -1;
    for (Mask m = remaining; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = std::popcount(adj_[static_cast<std::size_t>(v)] & remaining);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    Mask pivot_bit = Mask{1} << pivot;
    search(remaining & ~(adj_[static_cast<std::size_t>(pivot)] | pivot_bit), size + 1);
    search(remaining & ~pivot_bit, size);
  }

  std::vector<Mask> adj_;
  int best_ = 0;
};

}  // namespace

int independence_number_branch_and_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw LimitError("exact independence number of a non-chordal graph is limited to 64 vertices");
  if (n == 0) return 0;
  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  return IndependentSetSearch(g).run(all);
}

int independence_number(const Graph& g) {
  if (is_chordal(g)) return static_cast<int>(chordal_maximum_independent_set(g).size());
  return independence_number_branch_and_bound(g);
}

Graph path_graph(int n) {
  if (n < 0) throw DomainError("path size must be non-negative");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges);
}

Graph complete_graph(int n) {
  if (n < 0) throw DomainError("complete graph size must be non-negative");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph edgeless_graph(int n) {
  if (n < 0) throw DomainError("edgeless graph size must be non-negative");
  return Graph::build(n, std::span<const Edge>{});
}

Graph tree_graph(int n, std::span<const Edge> edges) {
  Graph g = Graph::build(n, edges);
  if (!is_tree(g)) throw DomainError("edge list is not a spanning tree on " + std::to_string(n) + " vertices");
  return g;
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.vertex_count();
  const int b = h.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + a, v + a);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::build(a + b, edges);
}

Graph complete_join_edgeless(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("join sizes must be non-negative");
  return join(complete_graph(a), edgeless_graph(b));
}

Graph counterexample_family(int k) {
  if (k < 3 || k % 2 == 0) throw DomainError("counterexample family needs odd k >= 3, got " + std::to_string(k));
  Graph g = edgeless_graph(3);
  for (int i = 1; i < k; ++i) g = join(g, edgeless_graph(3));
  return g;
}

Graph figure1_graph() {
  // Vertices A..H of the drawing map to 0..7.
  enum { A, B, C, D, E, F, G, H };
  static constexpr Edge kEdges[] = {
      {A, B}, {B, G}, {G, E}, {E, F}, {F, H}, {H, A},  // outer cycle
      {A, C}, {C, B}, {F, D}, {D, E},                  // inner triangles
      {A, D}, {A, E}, {C, E}, {C, F}, {B, D},
      {B, F}, {C, H}, {D, H}, {C, G}, {D, G},
  };
  return Graph::build(8, kEdges);
}

Graph complete_on_subset(int n, std::span<const int> m) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int v : m) {
    if (v < 0 || v >= n) throw DomainError("subset vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (in[static_cast<std::size_t>(u)] || in[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

}  // namespace chordsieve
