#include <benchmark/benchmark.h>

#include <map>
#include <numeric>

#include "chordsieve/cliques.hpp"
#include "chordsieve/event_system.hpp"
#include "chordsieve/kernels.hpp"

using namespace chordsieve;

namespace {

// Bernoulli product over `coords` coordinates: 2^coords outcomes. Event v
// needs coordinates v and v+1 (mod coords); the graph is a chordal band.
struct Fixture {
  EventSystem<double> sys;
  std::vector<OutcomeSet> events;
  std::vector<Clique> cliques;

  explicit Fixture(int coords, int n)
      : sys(EventSystem<double>::bernoulli_product(std::vector<double>(static_cast<std::size_t>(coords), 0.7),
                                                   definitions(coords, n))),
        events(sys.events().begin(), sys.events().end()) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n && v <= u + 3; ++v) edges.emplace_back(u, v);
    cliques = clique_complex(Graph::build(n, edges)).cliques;
  }

  static std::vector<std::vector<int>> definitions(int coords, int n) {
    std::vector<std::vector<int>> defs;
    for (int v = 0; v < n; ++v) defs.push_back({v % coords, (v + 1) % coords});
    return defs;
  }
};

const Fixture& fixture(int coords) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(coords);
  if (it == cache.end()) it = cache.emplace(coords, Fixture(coords, 16)).first;
  return it->second;
}

template <class Fn>
void run(benchmark::State& state, Fn&& fn) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fn(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.sys.outcome_count()));
}

void BM_SignedCliqueSum_Serial(benchmark::State& state) {
  run(state, [](const Fixture& f) {
    return kernels::serial::signed_clique_sum<double>(f.sys.weights(), f.events, f.cliques);
  });
}

void BM_SignedCliqueSum_Parallel(benchmark::State& state) {
  run(state, [](const Fixture& f) {
    return kernels::parallel::signed_clique_sum<double>(f.sys.weights(), f.events, f.cliques);
  });
}

void BM_Union_Serial(benchmark::State& state) {
  run(state, [](const Fixture& f) { return kernels::serial::union_weight<double>(f.sys.weights(), f.events); });
}

void BM_Union_Parallel(benchmark::State& state) {
  run(state, [](const Fixture& f) { return kernels::parallel::union_weight<double>(f.sys.weights(), f.events); });
}

const std::vector<int> kAll = [] {
  std::vector<int> v(16);
  std::iota(v.begin(), v.end(), 0);
  return v;
}();

void BM_Intersection_Serial(benchmark::State& state) {
  run(state, [](const Fixture& f) {
    return kernels::serial::intersection_weight<double>(f.sys.weights(), f.events, kAll);
  });
}

void BM_Intersection_Parallel(benchmark::State& state) {
  run(state, [](const Fixture& f) {
    return kernels::parallel::intersection_weight<double>(f.sys.weights(), f.events, kAll);
  });
}

}  // namespace

BENCHMARK(BM_SignedCliqueSum_Serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignedCliqueSum_Parallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Union_Serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Union_Parallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Intersection_Serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Intersection_Parallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
