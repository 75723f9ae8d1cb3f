#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chordsieve/errors.hpp"
#include "chordsieve/graph.hpp"
#include "chordsieve/kernels.hpp"
#include "chordsieve/outcome_set.hpp"
#include "chordsieve/value_domain.hpp"

namespace chordsieve {

// Product spaces are enumerated explicitly; 2^24 outcomes is the ceiling.
inline constexpr int kMaxCoordinates = 24;

// Tolerance on the total weight of a real-valued outcome space.
inline constexpr double kWeightSumTolerance = 1e-12;

// Finite outcome space with one event per graph vertex. Immutable.
template <ValueDomain V>
class EventSystem {
 public:
  // weights[o] is the mass of outcome o; events[v] lists the outcomes in A_v.
  static EventSystem from_outcomes(std::vector<V> weights, const std::vector<std::vector<int>>& events);

  // Outcome o encodes coordinate states by bit: bit c set means coordinate c
  // is on, which happens with probability probs[c]. Event i is the set of
  // states with every coordinate of event_defs[i] on.
  static EventSystem bernoulli_product(const std::vector<V>& probs, const std::vector<std::vector<int>>& event_defs);

  std::size_t outcome_count() const { return weights_.size(); }
  int event_count() const { return static_cast<int>(events_.size()); }
  std::span<const V> weights() const { return weights_; }
  std::span<const OutcomeSet> events() const { return events_; }
  const OutcomeSet& event(int v) const { return events_[static_cast<std::size_t>(v)]; }

 private:
  EventSystem(std::vector<V> weights, std::vector<OutcomeSet> events)
      : weights_(std::move(weights)), events_(std::move(events)) {}

  std::vector<V> weights_;
  std::vector<OutcomeSet> events_;
};

// B_J: the outcomes lying in exactly the events indexed by J.
template <ValueDomain V>
struct Atom {
  std::vector<int> signature;
  V probability;
  bool has_support = false;  // some outcome of non-zero weight lies in B_J
};

namespace detail {

template <ValueDomain V>
void validate_weights(const std::vector<V>& weights) {
  if (weights.empty()) throw DomainError("outcome space is empty");
  V total = ValueTraits<V>::zero();
  for (const auto& w : weights) total = total + w;
  if constexpr (std::is_same_v<V, double>) {
    for (double w : weights)
      if (!(w >= 0.0)) throw DomainError("negative or NaN outcome weight");
    if (!(std::abs(total - 1.0) <= kWeightSumTolerance))
      throw DomainError("outcome weights sum to " + ValueTraits<double>::to_string(total) + ", not 1");
  } else {
    if constexpr (ValueTraits<V>::ordered) {
      for (const auto& w : weights)
        if (w < ValueTraits<V>::zero()) throw DomainError("negative outcome weight");
    }
    if (!ValueTraits<V>::is_zero(total - ValueTraits<V>::one()))
      throw DomainError("outcome weights sum to " + ValueTraits<V>::to_string(total) + ", not 1");
  }
}

template <ValueDomain V>
void validate_probability(const V& p) {
  if constexpr (ValueTraits<V>::ordered) {
    if (!(p >= ValueTraits<V>::zero() && p <= ValueTraits<V>::one()))
      throw DomainError("coordinate probability " + ValueTraits<V>::to_string(p) + " outside [0,1]");
  }
}

inline void check_index_set(std::span<const int> index_set, int n, const char* what) {
  if (index_set.empty()) throw DomainError(std::string(what) + " index set must be non-empty");
  for (int i : index_set)
    if (i < 0 || i >= n) throw DomainError("event index " + std::to_string(i) + " out of range");
}

}  // namespace detail

template <ValueDomain V>
EventSystem<V> EventSystem<V>::from_outcomes(std::vector<V> weights, const std::vector<std::vector<int>>& events) {
  detail::validate_weights(weights);
  if (events.empty()) throw DomainError("event list is empty; at least one event is required");
  std::vector<OutcomeSet> sets;
  sets.reserve(events.size());
  for (const auto& e : events) {
    OutcomeSet s(weights.size());
    for (int o : e) {
      if (o < 0 || static_cast<std::size_t>(o) >= weights.size())
        throw DomainError("outcome " + std::to_string(o) + " out of range");
      s.set(static_cast<std::size_t>(o));
    }
    sets.push_back(std::move(s));
  }
  return EventSystem(std::move(weights), std::move(sets));
}

template <ValueDomain V>
EventSystem<V> EventSystem<V>::bernoulli_product(const std::vector<V>& probs,
                                                 const std::vector<std::vector<int>>& event_defs) {
  const int m = static_cast<int>(probs.size());
  if (m > kMaxCoordinates)
    throw LimitError("product space with " + std::to_string(m) + " coordinates exceeds the cap of " +
                     std::to_string(kMaxCoordinates));
  if (event_defs.empty()) throw DomainError("event list is empty; at least one event is required");
  for (const auto& p : probs) detail::validate_probability(p);
  const std::size_t outcomes = std::size_t{1} << m;
  // Doubling construction: after coordinate c the first 2^(c+1) entries hold
  // the marginal weights of coordinates 0..c.
  std::vector<V> weights(outcomes, ValueTraits<V>::one());
  for (int c = 0; c < m; ++c) {
    const std::size_t half = std::size_t{1} << c;
    const V& on = probs[static_cast<std::size_t>(c)];
    const V off = ValueTraits<V>::one() - on;
    for (std::size_t o = 0; o < half; ++o) {
      weights[o + half] = weights[o] * on;
      weights[o] = weights[o] * off;
    }
  }
  std::vector<OutcomeSet> sets;
  for (const auto& def : event_defs) {
    std::size_t required = 0;
    for (int c : def) {
      if (c < 0 || c >= m) throw DomainError("coordinate " + std::to_string(c) + " out of range");
      required |= std::size_t{1} << c;
    }
    OutcomeSet s(outcomes);
    for (std::size_t o = 0; o < outcomes; ++o)
      if ((o & required) == required) s.set(o);
    sets.push_back(std::move(s));
  }
  return EventSystem(std::move(weights), std::move(sets));
}

// Pr of the intersection of A_i over the non-empty index set.
template <ValueDomain V>
V intersection_prob(const EventSystem<V>& sys, std::span<const int> index_set) {
  detail::check_index_set(index_set, sys.event_count(), "intersection");
  return kernels::parallel::intersection_weight<V>(sys.weights(), sys.events(), index_set);
}

template <ValueDomain V>
V intersection_prob(const EventSystem<V>& sys, std::initializer_list<int> index_set) {
  return intersection_prob(sys, std::span<const int>(index_set.begin(), index_set.size()));
}

// Union probability by direct outcome summation; the reference value every
// bound is checked against.
template <ValueDomain V>
V union_prob_exact(const EventSystem<V>& sys) {
  return kernels::parallel::union_weight<V>(sys.weights(), sys.events());
}

template <ValueDomain V>
std::vector<int> outcome_signature(const EventSystem<V>& sys, std::size_t outcome) {
  std::vector<int> sig;
  for (int v = 0; v < sys.event_count(); ++v)
    if (sys.event(v).test(outcome)) sig.push_back(v);
  return sig;
}

// Pr(B_J) for a non-empty J.
template <ValueDomain V>
V atom_prob(const EventSystem<V>& sys, std::span<const int> j) {
  detail::check_index_set(j, sys.event_count(), "atom");
  std::vector<int> target(j.begin(), j.end());
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  V acc = ValueTraits<V>::zero();
  for (std::size_t o = 0; o < sys.outcome_count(); ++o)
    if (outcome_signature(sys, o) == target) acc = acc + sys.weights()[o];
  return acc;
}

// Every atom B_J (J non-empty) that contains at least one outcome, ordered
// by signature. Atoms that contain no outcome have probability zero and
// are omitted.
template <ValueDomain V>
std::vector<Atom<V>> atom_decomposition(const EventSystem<V>& sys) {
  std::map<std::vector<int>, Atom<V>> by_signature;
  for (std::size_t o = 0; o < sys.outcome_count(); ++o) {
    auto sig = outcome_signature(sys, o);
    if (sig.empty()) continue;
    auto [it, inserted] = by_signature.try_emplace(sig, Atom<V>{sig, ValueTraits<V>::zero(), false});
    it->second.probability = it->second.probability + sys.weights()[o];
    if (!ValueTraits<V>::is_zero(sys.weights()[o])) it->second.has_support = true;
  }
  std::vector<Atom<V>> atoms;
  atoms.reserve(by_signature.size());
  for (auto& [sig, atom] : by_signature) atoms.push_back(std::move(atom));
  return atoms;
}

// alpha'(G): the largest c(G[J]) over atoms B_J with non-empty support.
// Falls back to 1 when the union has no support at all.
template <ValueDomain V>
int alpha_prime(const EventSystem<V>& sys, const Graph& g) {
  if constexpr (!ValueTraits<V>::decidable_support) {
    throw DomainError(std::string("alpha' needs decidable atom support; the ") + ValueTraits<V>::name +
                      " backend has none");
  } else {
    if (sys.event_count() != g.vertex_count())
      throw DomainError("event count " + std::to_string(sys.event_count()) + " does not match vertex count " +
                        std::to_string(g.vertex_count()));
    int best = 1;
    for (const auto& atom : atom_decomposition(sys))
      if (atom.has_support) best = std::max(best, connected_components(induced_subgraph(g, atom.signature).graph));
    return best;
  }
}

}  // namespace chordsieve
