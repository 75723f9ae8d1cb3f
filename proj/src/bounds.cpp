#include "chordsieve/bounds.hpp"

#include <array>
#include <utility>

namespace chordsieve {

namespace {

constexpr std::array<std::pair<BoundKind, std::string_view>, 14> kKindNames{{
    {BoundKind::bonferroni_upper, "bonferroni-upper"},
    {BoundKind::bonferroni_lower, "bonferroni-lower"},
    {BoundKind::chordal_upper, "chordal-upper"},
    {BoundKind::chordal_lower, "chordal-lower"},
    {BoundKind::chordal_lower_sharpened, "chordal-lower-sharpened"},
    {BoundKind::hunter_upper, "hunter-upper"},
    {BoundKind::hunter_lower, "hunter-lower"},
    {BoundKind::path_lower, "path-lower"},
    {BoundKind::kwerel_lower, "kwerel-lower"},
    {BoundKind::kwerel_upper, "kwerel-upper"},
    {BoundKind::seneta_lower, "seneta-lower"},
    {BoundKind::seneta_upper, "seneta-upper"},
    {BoundKind::kwerel2_lower, "kwerel2-lower"},
    {BoundKind::generalized_lower, "generalized-lower"},
}};

}  // namespace

std::string_view to_string(BoundKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::string_view to_string(Direction direction) { return direction == Direction::upper ? "upper" : "lower"; }

BoundKind parse_bound_kind(std::string_view id) {
  for (const auto& [k, name] : kKindNames)
    if (name == id) return k;
  throw ParseError("unknown bound kind '" + std::string(id) + "'");
}

Direction direction_of(BoundKind kind) {
  switch (kind) {
    case BoundKind::bonferroni_upper:
    case BoundKind::chordal_upper:
    case BoundKind::hunter_upper:
    case BoundKind::kwerel_upper:
    case BoundKind::seneta_upper:
      return Direction::upper;
    default:
      return Direction::lower;
  }
}

const std::vector<BoundKind>& all_bound_kinds() {
  static const std::vector<BoundKind> kinds = [] {
    std::vector<BoundKind> out;
    for (const auto& [k, name] : kKindNames) out.push_back(k);
    return out;
  }();
  return kinds;
}

Rational generalized_coefficient(int n, int m, int k) {
  if (k < 1 || k > m + 1 || m > n - 1) throw DomainError("generalized coefficient index out of range");
  if (k == m + 1) {
    Rational c = Rational(m + 1) / binomial(n, m);
    return m % 2 == 0 ? c : Rational(-c);
  }
  Rational c = binomial(m, k) / binomial(n, k) * Rational(n * k - (m + 1) * (k - 1), m - k + 1);
  return (k - 1) % 2 == 0 ? c : Rational(-c);
}

}  // namespace chordsieve
