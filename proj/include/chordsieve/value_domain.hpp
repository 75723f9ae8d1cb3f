#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <type_traits>

#include "chordsieve/polynomial.hpp"
#include "chordsieve/rational.hpp"

namespace chordsieve {

// Per-backend operations that the arithmetic operators do not cover.
//
//   zero(), one()          additive and multiplicative identities
//   divide(v, k)           v / k for a positive integer k (exact except for double)
//   is_zero(v)             exact zero test; for double this is v == 0.0
//   ordered                the backend has a meaningful total order
//   decidable_support      outcome weights can be tested for emptiness of support
//   to_string(v)           canonical text form used in reports
template <class V>
struct ValueTraits;

template <>
struct ValueTraits<double> {
  static constexpr bool ordered = true;
  static constexpr bool decidable_support = true;
  static constexpr const char* name = "real";
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(std::int64_t k) { return static_cast<double>(k); }
  static double divide(double v, std::int64_t k) { return v / static_cast<double>(k); }
  static bool is_zero(double v) { return v == 0.0; }
  static std::string to_string(double v);
};

template <>
struct ValueTraits<Rational> {
  static constexpr bool ordered = true;
  static constexpr bool decidable_support = true;
  static constexpr const char* name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(std::int64_t k) { return Rational(k); }
  static Rational divide(const Rational& v, std::int64_t k) { return v / Rational(k); }
  static bool is_zero(const Rational& v) { return v == 0; }
  static std::string to_string(const Rational& v) { return to_fraction_string(v); }
};

template <>
struct ValueTraits<Polynomial> {
  static constexpr bool ordered = false;
  static constexpr bool decidable_support = false;
  static constexpr const char* name = "polynomial";
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(1); }
  static Polynomial from_int(std::int64_t k) { return Polynomial(Rational(k)); }
  static Polynomial divide(const Polynomial& v, std::int64_t k) { return v / k; }
  static bool is_zero(const Polynomial& v) { return v.is_zero(); }
  static std::string to_string(const Polynomial& v) { return v.to_coefficient_string(); }
};

template <class V>
concept ValueDomain = std::copyable<V> && requires(const V& a, const V& b, std::int64_t k) {
  { a + b } -> std::convertible_to<V>;
  { a - b } -> std::convertible_to<V>;
  { a * b } -> std::convertible_to<V>;
  { ValueTraits<V>::zero() } -> std::convertible_to<V>;
  { ValueTraits<V>::one() } -> std::convertible_to<V>;
  { ValueTraits<V>::divide(a, k) } -> std::convertible_to<V>;
  { ValueTraits<V>::is_zero(a) } -> std::same_as<bool>;
};

// v * q for an exact rational factor q.
template <ValueDomain V>
V scaled(const V& v, const Rational& q) {
  if constexpr (std::is_same_v<V, double>) {
    return v * to_double(q);
  } else if constexpr (std::is_same_v<V, Polynomial>) {
    return v * Polynomial(q);
  } else {
    return v * V(q);
  }
}

template <class V>
concept OrderedValueDomain = ValueDomain<V> && ValueTraits<V>::ordered;

}  // namespace chordsieve
