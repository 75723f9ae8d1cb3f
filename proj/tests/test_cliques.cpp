#include <doctest.h>

#include <algorithm>
#include <set>

#include "chordsieve/cliques.hpp"
#include "chordsieve/errors.hpp"
#include "chordsieve/random.hpp"
#include "chordsieve/rational.hpp"
#include "support/oracles.hpp"

using namespace chordsieve;

namespace {

std::set<std::vector<int>> as_set(const CliqueComplex& cc) {
  std::set<std::vector<int>> out;
  for (const auto& c : cc.cliques) out.insert(c.vertices);
  return out;
}

}  // namespace

TEST_CASE("clique counts of the named graphs") {
  auto f1 = clique_complex(figure1_graph());
  CHECK(f1.size_counts == std::map<int, std::int64_t>{{1, 8}, {2, 20}, {3, 16}});

  auto k3 = clique_complex(complete_graph(3));
  CHECK(k3.size_counts == std::map<int, std::int64_t>{{1, 3}, {2, 3}, {3, 1}});

  auto p4 = clique_complex(path_graph(4));
  CHECK(p4.size_counts == std::map<int, std::int64_t>{{1, 4}, {2, 3}});
  CHECK(p4.cliques.front().vertices == std::vector<int>{0});
  CHECK(p4.cliques.back().vertices == std::vector<int>{2, 3});

  auto capped = clique_complex(complete_graph(5), 2);
  CHECK(capped.size_counts == std::map<int, std::int64_t>{{1, 5}, {2, 10}});
  CHECK_THROWS_AS(clique_complex(complete_graph(3), 0), DomainError);
  CHECK_THROWS_AS(clique_complex_chordal(cycle_graph(4)), DomainError);
}

TEST_CASE("counterexample family clique counts are C(k,j) 3^j") {
  for (int k : {3, 5}) {
    auto counts = clique_size_counts(counterexample_family(k));
    auto general = clique_complex_general(counterexample_family(k)).size_counts;
    CHECK(counts == general);
    for (int j = 1; j <= 3 * k; ++j) {
      BigInt pow3 = 1;
      for (int t = 0; t < j; ++t) pow3 *= 3;
      Rational expected = binomial(k, j) * Rational(pow3);
      CHECK(Rational(counts.count(j) ? counts.at(j) : 0) == expected);
    }
  }
}

TEST_CASE("canonical order is size-major then lexicographic") {
  auto cc = clique_complex(complete_graph(4));
  CHECK(std::is_sorted(cc.cliques.begin(), cc.cliques.end(), canonical_less));
  CHECK(cc.cliques[4].vertices == std::vector<int>{0, 1});
  CHECK(cc.cliques.back().vertices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("clique complexes match subset enumeration") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 10;
    Graph g = i % 2 ? random_chordal_graph(n, rng) : random_graph(n, 0.5, rng);
    auto expected_list = oracle::cliques_by_subsets(g);
    std::set<std::vector<int>> expected(expected_list.begin(), expected_list.end());
    auto general = clique_complex_general(g);
    REQUIRE(as_set(general) == expected);
    REQUIRE(general.cliques.size() == expected.size());
    if (is_chordal(g)) {
      auto fast = clique_complex_chordal(g);
      REQUIRE(fast.cliques == general.cliques);
    }
    REQUIRE(clique_size_counts(g) == general.size_counts);
    // Downward closed; every singleton present.
    for (const auto& c : general.cliques)
      for (std::size_t drop = 0; drop < c.vertices.size() && c.size() > 1; ++drop) {
        auto face = c.vertices;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        REQUIRE(expected.count(face) == 1);
      }
    REQUIRE(general.count(1) == n);
  }
}

TEST_CASE("truncated Euler sums") {
  CHECK(truncated_euler_sum(figure1_graph()) == 4);
  CHECK(truncated_euler_sum(counterexample_family(3)) == 1 + 8);
  CHECK(truncated_euler_sum(counterexample_family(5)) == 1 + 32);
  CHECK(truncated_euler_sum(path_graph(4), 1) == 1);
  CHECK(truncated_euler_sum(complete_graph(6), 1) == 6 - 15);
  CHECK(truncated_euler_sum(complete_graph(6), 2) == 6 - 15 + 20 - 15);
  CHECK(truncated_euler_sum(complete_graph(6), 3) == 1);
  CHECK_THROWS_AS(truncated_euler_sum(path_graph(3), 0), DomainError);
}

TEST_CASE("truncated Euler sum of chordal graphs is bounded by the component count") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_chordal_graph(1 + i % 10, rng);
    const int c = connected_components(g);
    for (int r = 1; r <= 6; ++r) {
      auto s = truncated_euler_sum(g, r);
      REQUIRE(s <= c);
      if (2 * r >= g.vertex_count()) REQUIRE(s == c);
    }
    REQUIRE(truncated_euler_sum(g) == c);
  }
}

TEST_CASE("alternating binomial identity") {
  CHECK(binomial_alternating_sum(4, 2).direct == 3);
  CHECK(binomial_alternating_sum(4, 2).closed == 3);
  CHECK(binomial_alternating_sum(1, 5).direct == 0);
  CHECK(binomial_alternating_sum(6, 3).closed == -10);
  CHECK_THROWS_AS(binomial_alternating_sum(0, 1), DomainError);
  for (int n = 1; n <= 20; ++n)
    for (int m = 0; m <= 20; ++m) {
      auto s = binomial_alternating_sum(n, m);
      REQUIRE(s.direct == s.closed);
    }
}
