#pragma once

#include <cstdint>
#include <random>

#include "chordsieve/event_system.hpp"
#include "chordsieve/graph.hpp"
#include "chordsieve/rational.hpp"

namespace chordsieve {

using Rng = std::mt19937_64;

// Chordal by construction: each new vertex is attached to a random clique of
// the graph built so far (possibly empty), so it is simplicial at insertion.
// Labels are shuffled afterwards.
Graph random_chordal_graph(int n, Rng& rng);

// Erdős–Rényi G(n, p).
Graph random_graph(int n, double edge_probability, Rng& rng);

// Uniform labeled tree from a random Prüfer sequence.
Graph random_tree(int n, Rng& rng);

// `n` events over `outcomes` outcomes. Weights are random, some exactly
// zero; each event is a random subset.
EventSystem<double> random_event_system(int n, int outcomes, Rng& rng);

// Same shape with small integer weights divided by their total.
EventSystem<Rational> random_rational_event_system(int n, int outcomes, Rng& rng);

}  // namespace chordsieve
