#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace chordsieve {

// Unordered vertex pair, stored normalized with first < second.
using Edge = std::pair<int, int>;

// Undirected simple graph on the dense vertex range 0..n-1.
// Immutable after construction; all queries are const and thread-safe.
class Graph {
 public:
  Graph() = default;

  // Validates and normalizes the edge list. Throws DomainError naming the
  // offending pair on a self-loop, duplicate edge or out-of-range endpoint.
  static Graph build(int vertex_count, std::span<const Edge> edges);
  static Graph build(int vertex_count, std::initializer_list<Edge> edges) {
    return build(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted lexicographically, each with first < second.
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph build_graph(int vertex_count, std::span<const Edge> edges) {
  return Graph::build(vertex_count, edges);
}

// Visit order of a maximum cardinality search. For a chordal graph the
// reversed order is a perfect elimination order.
struct EliminationOrder {
  std::vector<int> order;
};

struct InducedSubgraph {
  Graph graph;
  // original[i] is the host vertex that became vertex i.
  std::vector<int> original;
};

// Maximum cardinality search; ties go to the smallest vertex index.
EliminationOrder mcs_order(const Graph& g);

// True iff every vertex is simplicial in the subgraph induced by itself
// and the vertices after it in `order`.
bool is_perfect_elimination_order(const Graph& g, std::span<const int> order);

// Reversed MCS order when it is a perfect elimination order, else nullopt.
std::optional<std::vector<int>> perfect_elimination_order(const Graph& g);

bool is_chordal(const Graph& g);

// c(G). Zero only for the graph without vertices.
int connected_components(const Graph& g);

bool is_tree(const Graph& g);

// G[s] relabeled to 0..|s|-1 in ascending host order. `s` must be non-empty;
// duplicates are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

// Exact alpha(G). Chordal graphs take the elimination-order greedy path;
// anything else goes through branch and bound (limit: 64 vertices).
int independence_number(const Graph& g);

// Branch and bound over 64-bit vertex masks. Throws LimitError above 64
// vertices; practical up to roughly 30 on dense inputs.
int independence_number_branch_and_bound(const Graph& g);

// Greedy maximum independent set along a perfect elimination order.
// Throws DomainError if g is not chordal.
std::vector<int> chordal_maximum_independent_set(const Graph& g);

// Named families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
// Validates that the edges form a spanning tree on n vertices.
Graph tree_graph(int n, std::span<const Edge> edges);
// Disjoint union of g and h (h shifted by |V(g)|) plus every cross edge.
Graph join(const Graph& g, const Graph& h);
// K_a * L_b: vertices 0..a-1 form the complete side.
Graph complete_join_edgeless(int a, int b);
// G_k: join of k disjoint copies of the edgeless graph on three vertices.
// k must be odd and at least 3.
Graph counterexample_family(int k);
// The 8-vertex, 20-edge non-chordal graph with clique counts (8, 20, 16)
// and independence number 3.
Graph figure1_graph();
// Join of the complete graph on `m` and the edgeless graph on the rest.
Graph complete_on_subset(int n, std::span<const int> m);

}  // namespace chordsieve
