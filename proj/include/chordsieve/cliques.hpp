#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "chordsieve/graph.hpp"

namespace chordsieve {

// Non-empty clique of a host graph; vertices sorted ascending.
struct Clique {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const Clique&, const Clique&) = default;
};

// Size-major, then lexicographic.
bool canonical_less(const Clique& a, const Clique& b);

// The clique complex of a graph, optionally truncated at a maximum size.
// Cliques are stored in canonical order.
struct CliqueComplex {
  std::vector<Clique> cliques;
  std::map<int, std::int64_t> size_counts;

  std::int64_t count(int size) const;
  int max_size() const { return size_counts.empty() ? 0 : size_counts.rbegin()->first; }
};

// nullopt means unbounded.
using SizeCap = std::optional<int>;

// Dispatches to the elimination-order path for chordal graphs.
CliqueComplex clique_complex(const Graph& g, SizeCap max_size = std::nullopt);

// Charges each clique to its earliest vertex in a perfect elimination order.
// Throws DomainError for a non-chordal graph.
CliqueComplex clique_complex_chordal(const Graph& g, SizeCap max_size = std::nullopt);

// Recursive extension enumeration; valid for every graph.
CliqueComplex clique_complex_general(const Graph& g, SizeCap max_size = std::nullopt);

// Clique counts by size without materializing the cliques.
std::map<int, std::int64_t> clique_size_counts(const Graph& g, SizeCap max_size = std::nullopt);

// Sum over cliques I with |I| <= 2r of (-1)^(|I|-1); nullopt r sums the
// whole complex (its Euler characteristic).
std::int64_t truncated_euler_sum(const Graph& g, std::optional<int> r = std::nullopt);

struct AlternatingBinomialSum {
  std::int64_t direct;  // sum_{k=0}^{m} (-1)^k C(n, k)
  std::int64_t closed;  // (-1)^m C(n-1, m)
};

// Both sides of the alternating binomial identity; n >= 1, m >= 0.
AlternatingBinomialSum binomial_alternating_sum(int n, int m);

}  // namespace chordsieve
