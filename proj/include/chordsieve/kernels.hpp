#pragma once

// Summation kernels behind every probability query. Each kernel has a
// serial reference version and an OpenMP version. The OpenMP versions cut
// the iteration space into kBlocks fixed blocks and merge block partials in
// block order, so results do not depend on the thread count.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "chordsieve/cliques.hpp"
#include "chordsieve/outcome_set.hpp"
#include "chordsieve/value_domain.hpp"

namespace chordsieve::kernels {

inline constexpr std::size_t kBlocks = 64;

namespace detail {

template <ValueDomain V>
void add_masked(V& acc, std::span<const V> weights, std::size_t word_index, OutcomeSet::Word mask) {
  const std::size_t base = word_index * OutcomeSet::kWordBits;
  while (mask) {
    acc = acc + weights[base + static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
}

template <ValueDomain V>
V intersection_range(std::span<const V> weights, std::span<const OutcomeSet> events,
                     std::span<const int> index_set, std::size_t w0, std::size_t w1) {
  V acc = ValueTraits<V>::zero();
  for (std::size_t w = w0; w < w1; ++w) {
    OutcomeSet::Word mask = ~OutcomeSet::Word{0};
    for (int i : index_set) mask &= events[static_cast<std::size_t>(i)].words()[w];
    add_masked(acc, weights, w, mask);
  }
  return acc;
}

template <ValueDomain V>
V union_range(std::span<const V> weights, std::span<const OutcomeSet> events, std::size_t w0, std::size_t w1) {
  V acc = ValueTraits<V>::zero();
  for (std::size_t w = w0; w < w1; ++w) {
    OutcomeSet::Word mask = 0;
    for (const auto& e : events) mask |= e.words()[w];
    add_masked(acc, weights, w, mask);
  }
  return acc;
}

inline std::size_t word_count(std::span<const OutcomeSet> events) {
  return events.empty() ? 0 : events.front().words().size();
}

inline std::pair<std::size_t, std::size_t> block_range(std::size_t total, std::size_t block) {
  const std::size_t per = (total + kBlocks - 1) / kBlocks;
  const std::size_t lo = std::min(total, block * per);
  return {lo, std::min(total, lo + per)};
}

template <ValueDomain V>
V merge(const std::vector<V>& partials) {
  V acc = ValueTraits<V>::zero();
  for (const auto& p : partials) acc = acc + p;
  return acc;
}

template <ValueDomain V>
V signed_range(std::span<const V> weights, std::span<const OutcomeSet> events, std::span<const Clique> cliques,
               std::size_t c0, std::size_t c1) {
  const std::size_t words = word_count(events);
  V pos = ValueTraits<V>::zero();
  V neg = ValueTraits<V>::zero();
  for (std::size_t c = c0; c < c1; ++c) {
    const auto& vs = cliques[c].vertices;
    V term = intersection_range<V>(weights, events, vs, 0, words);
    if (vs.size() % 2 == 1)
      pos = pos + term;
    else
      neg = neg + term;
  }
  return pos - neg;
}

}  // namespace detail

namespace serial {

// Pr(intersection of events[i] for i in index_set); index_set non-empty.
template <ValueDomain V>
V intersection_weight(std::span<const V> weights, std::span<const OutcomeSet> events, std::span<const int> index_set) {
  return detail::intersection_range<V>(weights, events, index_set, 0, detail::word_count(events));
}

template <ValueDomain V>
V union_weight(std::span<const V> weights, std::span<const OutcomeSet> events) {
  return detail::union_range<V>(weights, events, 0, detail::word_count(events));
}

// Sum over the given cliques of (-1)^(|I|-1) Pr(intersection over I).
template <ValueDomain V>
V signed_clique_sum(std::span<const V> weights, std::span<const OutcomeSet> events, std::span<const Clique> cliques) {
  return detail::signed_range<V>(weights, events, cliques, 0, cliques.size());
}

}  // namespace serial

namespace parallel {

template <ValueDomain V>
V intersection_weight(std::span<const V> weights, std::span<const OutcomeSet> events, std::span<const int> index_set) {
  const std::size_t words = detail::word_count(events);
  std::vector<V> partials(kBlocks, ValueTraits<V>::zero());
#pragma omp parallel for schedule(static) if (words >= 4 * kBlocks)
  for (std::size_t b = 0; b < kBlocks; ++b) {
    auto [lo, hi] = detail::block_range(words, b);
    partials[b] = detail::intersection_range<V>(weights, events, index_set, lo, hi);
  }
  return detail::merge(partials);
}

template <ValueDomain V>
V union_weight(std::span<const V> weights, std::span<const OutcomeSet> events) {
  const std::size_t words = detail::word_count(events);
  std::vector<V> partials(kBlocks, ValueTraits<V>::zero());
#pragma omp parallel for schedule(static) if (words >= 4 * kBlocks)
  for (std::size_t b = 0; b < kBlocks; ++b) {
    auto [lo, hi] = detail::block_range(words, b);
    partials[b] = detail::union_range<V>(weights, events, lo, hi);
  }
  return detail::merge(partials);
}

template <ValueDomain V>
V signed_clique_sum(std::span<const V> weights, std::span<const OutcomeSet> events, std::span<const Clique> cliques) {
  std::vector<V> partials(kBlocks, ValueTraits<V>::zero());
#pragma omp parallel for schedule(dynamic) if (cliques.size() >= 2 * kBlocks)
  for (std::size_t b = 0; b < kBlocks; ++b) {
    auto [lo, hi] = detail::block_range(cliques.size(), b);
    partials[b] = detail::signed_range<V>(weights, events, cliques, lo, hi);
  }
  return detail::merge(partials);
}

}  // namespace parallel

}  // namespace chordsieve::kernels
