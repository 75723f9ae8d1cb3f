#include <doctest.h>

#include <omp.h>

#include "chordsieve/cliques.hpp"
#include "chordsieve/kernels.hpp"
#include "chordsieve/random.hpp"
#include "support/oracles.hpp"

using namespace chordsieve;

namespace {

template <class V>
std::vector<OutcomeSet> event_sets(const EventSystem<V>& sys) {
  return {sys.events().begin(), sys.events().end()};
}

}  // namespace

TEST_CASE("serial and parallel kernels agree exactly on rationals") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    auto sys = random_rational_event_system(n, 1 + 37 * trial, rng);
    auto events = event_sets(sys);
    auto cliques = clique_complex(random_chordal_graph(n, rng)).cliques;
    std::span<const Rational> w = sys.weights();
    REQUIRE(kernels::serial::union_weight(w, std::span<const OutcomeSet>(events)) ==
            kernels::parallel::union_weight(w, std::span<const OutcomeSet>(events)));
    REQUIRE(kernels::serial::signed_clique_sum(w, std::span<const OutcomeSet>(events), std::span<const Clique>(cliques)) ==
            kernels::parallel::signed_clique_sum(w, std::span<const OutcomeSet>(events), std::span<const Clique>(cliques)));
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    REQUIRE(kernels::serial::intersection_weight(w, std::span<const OutcomeSet>(events), std::span<const int>(all)) ==
            oracle::intersection_by_scan(sys, all));
  }
}

TEST_CASE("parallel double kernels are deterministic and match the serial reference") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 6;
    auto sys = random_event_system(n, 4096 + 101 * trial, rng);
    auto events = event_sets(sys);
    auto cliques = clique_complex(random_chordal_graph(n, rng)).cliques;
    std::span<const double> w = sys.weights();
    std::span<const OutcomeSet> ev(events);
    std::span<const Clique> cl(cliques);
    const double serial = kernels::serial::signed_clique_sum(w, ev, cl);
    const double reference = oracle::signed_sum_by_scan(sys, [&] {
      std::vector<std::vector<int>> sets;
      for (const auto& c : cliques) sets.push_back(c.vertices);
      return sets;
    }(), n);
    REQUIRE(serial == doctest::Approx(reference).epsilon(1e-12));
    std::vector<double> by_threads;
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      by_threads.push_back(kernels::parallel::signed_clique_sum(w, ev, cl));
      REQUIRE(std::abs(kernels::parallel::union_weight(w, ev) - kernels::serial::union_weight(w, ev)) <= 1e-12);
    }
    REQUIRE(std::abs(by_threads[0] - serial) <= 1e-12);
    REQUIRE(by_threads[0] == by_threads[1]);
    REQUIRE(by_threads[1] == by_threads[2]);
  }
  omp_set_num_threads(omp_get_num_procs());
}
