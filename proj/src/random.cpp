#include "chordsieve/random.hpp"

#include <algorithm>
#include <numeric>

#include "chordsieve/optimize.hpp"

namespace chordsieve {

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph::build(g.vertex_count(), edges);
}

std::vector<std::vector<int>> random_events(int n, int outcomes, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<int>> events(static_cast<std::size_t>(n));
  for (auto& e : events) {
    double density = unit(rng);
    for (int o = 0; o < outcomes; ++o)
      if (unit(rng) < density) e.push_back(o);
  }
  return events;
}

}  // namespace

Graph random_chordal_graph(int n, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::vector<Edge> edges;
  const double keep = unit(rng);
  for (int v = 1; v < n; ++v) {
    // Grow a clique among 0..v-1 starting from a random vertex.
    std::vector<int> clique;
    if (unit(rng) < 0.9) {
      std::uniform_int_distribution<int> pick(0, v - 1);
      clique.push_back(pick(rng));
      std::vector<int> others(static_cast<std::size_t>(v));
      std::iota(others.begin(), others.end(), 0);
      std::shuffle(others.begin(), others.end(), rng);
      for (int w : others) {
        if (w == clique.front() || unit(rng) >= keep) continue;
        bool ok = std::all_of(clique.begin(), clique.end(),
                              [&](int c) { return adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(w)]; });
        if (ok) clique.push_back(w);
      }
    }
    for (int c : clique) {
      adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = true;
      edges.emplace_back(c, v);
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph::build(n, edges), perm);
}

Graph random_graph(int n, double edge_probability, Rng& rng) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph random_tree(int n, Rng& rng) {
  if (n <= 2) return path_graph(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& x : seq) x = pick(rng);
  return tree_from_pruefer(n, seq);
}

EventSystem<double> random_event_system(int n, int outcomes, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(static_cast<std::size_t>(outcomes));
  for (auto& w : weights) w = unit(rng) < 0.15 ? 0.0 : unit(rng);
  if (std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) weights.front() = 1.0;
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& w : weights) w /= total;
  return EventSystem<double>::from_outcomes(std::move(weights), random_events(n, outcomes, rng));
}

EventSystem<Rational> random_rational_event_system(int n, int outcomes, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::vector<int> raw(static_cast<std::size_t>(outcomes));
  for (auto& w : raw) w = pick(rng);
  if (std::all_of(raw.begin(), raw.end(), [](int w) { return w == 0; })) raw.front() = 1;
  const int total = std::accumulate(raw.begin(), raw.end(), 0);
  std::vector<Rational> weights;
  for (int w : raw) weights.emplace_back(w, total);
  return EventSystem<Rational>::from_outcomes(std::move(weights), random_events(n, outcomes, rng));
}

}  // namespace chordsieve
