#include "chordsieve/cliques.hpp"

#include <algorithm>
#include <string>

#include "chordsieve/errors.hpp"

namespace chordsieve {

bool canonical_less(const Clique& a, const Clique& b) {
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

std::int64_t CliqueComplex::count(int size) const {
  auto it = size_counts.find(size);
  return it == size_counts.end() ? 0 : it->second;
}

namespace {

void check_cap(SizeCap max_size) {
  if (max_size && *max_size < 1) throw DomainError("clique size cap must be at least 1");
}

CliqueComplex finish(std::vector<Clique> cliques) {
  std::sort(cliques.begin(), cliques.end(), canonical_less);
  CliqueComplex cc;
  for (const auto& c : cliques) ++cc.size_counts[c.size()];
  cc.cliques = std::move(cliques);
  return cc;
}

// Later neighbors of each vertex with respect to a perfect elimination order.
std::vector<std::vector<int>> later_neighbors(const Graph& g, const std::vector<int>& peo) {
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < peo.size(); ++i) pos[static_cast<std::size_t>(peo[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> later(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)])
        later[static_cast<std::size_t>(v)].push_back(w);
  return later;
}

void extend(const Graph& g, std::vector<int>& current, const std::vector<int>& candidates, int cap,
            std::vector<Clique>& out) {
  out.push_back(Clique{current});
  if (static_cast<int>(current.size()) >= cap) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    int w = candidates[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(w, candidates[j])) next.push_back(candidates[j]);
    current.push_back(w);
    extend(g, current, next, cap, out);
    current.pop_back();
  }
}

void count_extend(const Graph& g, int depth, const std::vector<int>& candidates, int cap,
                  std::map<int, std::int64_t>& counts) {
  ++counts[depth];
  if (depth >= cap) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(candidates[i], candidates[j])) next.push_back(candidates[j]);
    count_extend(g, depth + 1, next, cap, counts);
  }
}

std::vector<int> greater_neighbors(const Graph& g, int v) {
  const auto& nb = g.neighbors(v);
  return {std::upper_bound(nb.begin(), nb.end(), v), nb.end()};
}

std::int64_t binom64(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CliqueComplex clique_complex_chordal(const Graph& g, SizeCap max_size) {
  check_cap(max_size);
  auto peo = perfect_elimination_order(g);
  if (!peo) throw DomainError("graph is not chordal");
  const int cap = max_size.value_or(g.vertex_count());
  auto later = later_neighbors(g, *peo);
  std::vector<Clique> cliques;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& base = later[static_cast<std::size_t>(v)];
    const int k = static_cast<int>(base.size());
    // Every subset of the later-neighbor clique, grown in index order.
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> void {
      std::vector<int> vs = chosen;
      vs.push_back(v);
      std::sort(vs.begin(), vs.end());
      cliques.push_back(Clique{std::move(vs)});
      if (static_cast<int>(chosen.size()) + 1 >= cap) return;
      for (int i = from; i < k; ++i) {
        chosen.push_back(base[static_cast<std::size_t>(i)]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
  }
  return finish(std::move(cliques));
}

CliqueComplex clique_complex_general(const Graph& g, SizeCap max_size) {
  check_cap(max_size);
  const int cap = max_size.value_or(g.vertex_count());
  std::vector<Clique> cliques;
  std::vector<int> current;
  for (int v = 0; v < g.vertex_count(); ++v) {
    current.assign(1, v);
    extend(g, current, greater_neighbors(g, v), cap, cliques);
  }
  return finish(std::move(cliques));
}

CliqueComplex clique_complex(const Graph& g, SizeCap max_size) {
  if (is_chordal(g)) return clique_complex_chordal(g, max_size);
  return clique_complex_general(g, max_size);
}

std::map<int, std::int64_t> clique_size_counts(const Graph& g, SizeCap max_size) {
  check_cap(max_size);
  const int cap = max_size.value_or(g.vertex_count());
  std::map<int, std::int64_t> counts;
  if (auto peo = perfect_elimination_order(g)) {
    // Cliques whose earliest vertex is v are {v} plus a subset of its
    // later-neighbor clique.
    for (const auto& base : later_neighbors(g, *peo)) {
      const int k = static_cast<int>(base.size());
      for (int j = 0; j <= std::min(k, cap - 1); ++j) counts[j + 1] += binom64(k, j);
    }
    return counts;
  }
  for (int v = 0; v < g.vertex_count(); ++v) count_extend(g, 1, greater_neighbors(g, v), cap, counts);
  return counts;
}

std::int64_t truncated_euler_sum(const Graph& g, std::optional<int> r) {
  if (r && *r < 1) throw DomainError("truncation depth r must be at least 1");
  SizeCap cap;
  if (r) cap = static_cast<int>(std::min<std::int64_t>(2LL * *r, std::max(g.vertex_count(), 1)));
  std::int64_t sum = 0;
  for (const auto& [size, count] : clique_size_counts(g, cap)) sum += (size % 2 == 1 ? count : -count);
  return sum;
}

AlternatingBinomialSum binomial_alternating_sum(int n, int m) {
  if (n < 1 || m < 0) throw DomainError("alternating binomial sum needs n >= 1 and m >= 0");
  AlternatingBinomialSum out{0, 0};
  for (int k = 0; k <= m; ++k) out.direct += (k % 2 == 0 ? 1 : -1) * binom64(n, k);
  out.closed = (m % 2 == 0 ? 1 : -1) * binom64(n - 1, m);
  return out;
}

}  // namespace chordsieve
