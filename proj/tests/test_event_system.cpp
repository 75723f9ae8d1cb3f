#include <doctest.h>

#include "chordsieve/errors.hpp"
#include "chordsieve/event_system.hpp"
#include "chordsieve/random.hpp"
#include "chordsieve/reliability.hpp"
#include "support/oracles.hpp"

using namespace chordsieve;

TEST_CASE("from_outcomes validation") {
  auto sys = EventSystem<double>::from_outcomes({0.5, 0.5}, {{0}, {1}});
  CHECK(intersection_prob(sys, {0, 1}) == 0.0);
  CHECK(intersection_prob(sys, {0}) == 0.5);
  CHECK(union_prob_exact(sys) == 1.0);
  CHECK_THROWS_AS(EventSystem<double>::from_outcomes({0.5, 0.4}, {{0}}), DomainError);
  CHECK_THROWS_AS(EventSystem<double>::from_outcomes({1.5, -0.5}, {{0}}), DomainError);
  CHECK_THROWS_AS(EventSystem<double>::from_outcomes({0.5, 0.5}, {}), DomainError);
  CHECK_THROWS_AS(EventSystem<double>::from_outcomes({0.5, 0.5}, {{2}}), DomainError);
  CHECK_THROWS_AS(EventSystem<Rational>::from_outcomes({Rational(1, 3), Rational(1, 3)}, {{0}}), DomainError);
  CHECK_NOTHROW(EventSystem<Rational>::from_outcomes({Rational(1, 3), Rational(2, 3)}, {{0}}));
  std::vector<int> empty;
  CHECK_THROWS_AS(intersection_prob(sys, empty), DomainError);
  CHECK_THROWS_AS(intersection_prob(sys, {3}), DomainError);
}

TEST_CASE("bernoulli product") {
  auto one = EventSystem<double>::bernoulli_product({0.3}, {{0}});
  CHECK(intersection_prob(one, {0}) == doctest::Approx(0.3));
  CHECK(one.outcome_count() == 2);

  auto sure = EventSystem<double>::bernoulli_product({1.0, 1.0, 1.0}, {{0}, {1, 2}, {0, 2}});
  for (int v = 0; v < 3; ++v) CHECK(intersection_prob(sure, {v}) == 1.0);

  CHECK_THROWS_AS(EventSystem<double>::bernoulli_product(std::vector<double>(25, 0.5), {{0}}), LimitError);
  CHECK_THROWS_AS(EventSystem<double>::bernoulli_product({1.5}, {{0}}), DomainError);
  CHECK_THROWS_AS(EventSystem<double>::bernoulli_product({0.5}, {{1}}), DomainError);

  // Symbolic appendix events: path arc-set sizes 2, 3, 3, 2.
  auto sym = symbolic_path_event_system(appendix_network());
  const Polynomial p = Polynomial::variable();
  CHECK(intersection_prob(sym, {0}) == p * p);
  CHECK(intersection_prob(sym, {1}) == p * p * p);
  CHECK(intersection_prob(sym, {2}) == p * p * p);
  CHECK(intersection_prob(sym, {3}) == p * p);
  CHECK(intersection_prob(sym, {0, 1}) == p * p * p * p);
  CHECK(intersection_prob(sym, {1, 2}) == p * p * p * p * p * p);
  CHECK(intersection_prob(sym, {0, 2}) == p * p * p * p);
}

TEST_CASE("bernoulli product matches explicit enumeration") {
  Rng rng(2);
  std::uniform_int_distribution<int> num(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + trial % 5;
    std::vector<Rational> probs;
    for (int c = 0; c < m; ++c) probs.emplace_back(num(rng), 6);
    std::vector<std::vector<int>> defs;
    for (int e = 0; e < 3; ++e) {
      std::vector<int> d;
      for (int c = 0; c < m; ++c)
        if (num(rng) % 2) d.push_back(c);
      defs.push_back(d);
    }
    auto sys = EventSystem<Rational>::bernoulli_product(probs, defs);
    // Explicit 2^m table built independently.
    std::vector<Rational> weights;
    std::vector<std::vector<int>> events(defs.size());
    for (int o = 0; o < (1 << m); ++o) {
      Rational w = 1;
      for (int c = 0; c < m; ++c) w *= ((o >> c) & 1) ? probs[static_cast<std::size_t>(c)] : Rational(1) - probs[static_cast<std::size_t>(c)];
      weights.push_back(w);
      for (std::size_t e = 0; e < defs.size(); ++e) {
        bool all = true;
        for (int c : defs[e]) all = all && ((o >> c) & 1);
        if (all) events[e].push_back(o);
      }
    }
    auto explicit_sys = EventSystem<Rational>::from_outcomes(weights, events);
    REQUIRE(std::equal(sys.weights().begin(), sys.weights().end(), explicit_sys.weights().begin()));
    for (int v = 0; v < 3; ++v) REQUIRE(sys.event(v) == explicit_sys.event(v));
  }
}

TEST_CASE("union and intersections match outcome scans") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto sys = random_rational_event_system(1 + trial % 6, 1 + trial % 70, rng);
    REQUIRE(union_prob_exact(sys) == oracle::union_by_scan(sys));
    for (oracle::Mask s = 1; s < (oracle::Mask{1} << sys.event_count()); ++s) {
      auto idx = oracle::mask_to_vector(s);
      REQUIRE(intersection_prob(sys, idx) == oracle::intersection_by_scan(sys, idx));
    }
  }
}

TEST_CASE("intersections are antitone") {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto sys = random_event_system(5, 40, rng);
    for (oracle::Mask s = 1; s < 32; ++s)
      for (oracle::Mask t = s; t; t = (t - 1) & s) {
        // t ⊆ s implies Pr(∩_t) >= Pr(∩_s).
        REQUIRE(intersection_prob(sys, oracle::mask_to_vector(t)) >=
                intersection_prob(sys, oracle::mask_to_vector(s)) - 1e-15);
      }
  }
}

TEST_CASE("atoms partition the union") {
  auto sure = EventSystem<Rational>::bernoulli_product({1, 1}, {{0}, {1}, {0, 1}});
  CHECK(atom_prob(sure, std::vector<int>{0, 1, 2}) == 1);
  CHECK(atom_prob(sure, std::vector<int>{0, 1}) == 0);
  CHECK(atom_prob(sure, std::vector<int>{2}) == 0);

  auto disjoint = EventSystem<Rational>::from_outcomes({Rational(1, 4), Rational(1, 4), Rational(1, 2)}, {{0}, {1}});
  CHECK(atom_prob(disjoint, std::vector<int>{0}) == Rational(1, 4));
  CHECK(atom_prob(disjoint, std::vector<int>{0, 1}) == 0);
  CHECK_THROWS_AS(atom_prob(disjoint, std::vector<int>{}), DomainError);

  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    auto sys = random_rational_event_system(n, 1 + trial % 50, rng);
    Rational total = 0;
    for (oracle::Mask j = 1; j < (oracle::Mask{1} << n); ++j) total += atom_prob(sys, oracle::mask_to_vector(j));
    REQUIRE(total == union_prob_exact(sys));
    Rational from_decomposition = 0;
    for (const auto& atom : atom_decomposition(sys)) from_decomposition += atom.probability;
    REQUIRE(from_decomposition == total);
  }
  // Every outcome of a 2^12 product space belongs to exactly one atom.
  std::vector<double> probs(12, 0.5);
  std::vector<std::vector<int>> defs{{0, 1}, {2, 3, 4}, {1, 5}, {6}, {7, 8, 9, 10}, {11, 0}};
  auto big = EventSystem<double>::bernoulli_product(probs, defs);
  double sum = 0.0;
  for (const auto& atom : atom_decomposition(big)) sum += atom.probability;
  CHECK(sum == doctest::Approx(union_prob_exact(big)).epsilon(1e-12));
}

TEST_CASE("alpha prime") {
  auto single = EventSystem<double>::from_outcomes({1.0}, {{0}});
  CHECK(alpha_prime(single, Graph::build(1, {})) == 1);

  // Path events with every arc certain: only B_V has support.
  auto sure = path_event_system<Rational>(appendix_network(), Rational(1));
  CHECK(alpha_prime(sure, path_graph(4)) == 1);
  CHECK(alpha_prime(sure, edgeless_graph(4)) == 4);

  // Nested events A_0 ⊇ A_1 ⊇ A_2 on a path: every non-empty atom is a
  // prefix {0..k}, which induces a connected subgraph.
  auto nested = EventSystem<double>::from_outcomes({0.25, 0.25, 0.25, 0.25}, {{0, 1, 2}, {1, 2}, {2}});
  CHECK(alpha_prime(nested, path_graph(3)) == 1);

  auto sym = symbolic_path_event_system(appendix_network());
  CHECK_THROWS_AS(alpha_prime(sym, path_graph(4)), DomainError);
  CHECK_THROWS_AS(alpha_prime(single, path_graph(2)), DomainError);

  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    auto sys = random_event_system(n, 1 + trial % 40, rng);
    Graph g = random_chordal_graph(n, rng);
    const int a = alpha_prime(sys, g);
    REQUIRE(a >= 1);
    REQUIRE(a <= independence_number(g));
  }
}
