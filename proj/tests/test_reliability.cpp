#include <doctest.h>

#include <sstream>

#include "chordsieve/bounds.hpp"
#include "chordsieve/errors.hpp"
#include "chordsieve/reliability.hpp"

using namespace chordsieve;

namespace {

Polynomial bound(const std::vector<NamedPolynomial>& list, std::string_view id) {
  for (const auto& b : list)
    if (b.id == id) return b.value;
  FAIL("missing bound " << id);
  return {};
}

// Reliability by summing the weight of every arc state in which t is
// reachable from s.
Polynomial reliability_by_states(const Network& net) {
  const int m = static_cast<int>(net.arcs.size());
  const Polynomial p = Polynomial::variable();
  const Polynomial q = Polynomial(1) - p;
  Polynomial total;
  for (int state = 0; state < (1 << m); ++state) {
    std::vector<bool> reached(static_cast<std::size_t>(net.node_count), false);
    reached[static_cast<std::size_t>(net.source)] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (int a = 0; a < m; ++a) {
        const auto& arc = net.arcs[static_cast<std::size_t>(a)];
        if (((state >> a) & 1) && reached[static_cast<std::size_t>(arc.tail)] && !reached[static_cast<std::size_t>(arc.head)]) {
          reached[static_cast<std::size_t>(arc.head)] = true;
          grew = true;
        }
      }
    }
    if (!reached[static_cast<std::size_t>(net.terminal)]) continue;
    Polynomial w(1);
    for (int a = 0; a < m; ++a) w = w * (((state >> a) & 1) ? p : q);
    total = total + w;
  }
  return total;
}

}  // namespace

TEST_CASE("appendix paths") {
  auto paths = enumerate_st_paths(appendix_network());
  REQUIRE(paths.size() == 4);
  CHECK(paths[0].label() == "15");
  CHECK(paths[1].label() == "136");
  CHECK(paths[2].label() == "245");
  CHECK(paths[3].label() == "26");
  CHECK(paths[2].arc_set() == std::vector<int>{1, 3, 4});

  Network single{2, {{0, 1}}, 0, 1, std::nullopt};
  CHECK(enumerate_st_paths(single).size() == 1);
  Network cut{3, {{0, 1}, {2, 1}}, 0, 2, std::nullopt};
  CHECK(enumerate_st_paths(cut).empty());
  CHECK(exact_reliability_polynomial(cut).is_zero());
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS((Network{2, {{0, 1}}, 0, 0, std::nullopt}.validate()), DomainError);
  CHECK_THROWS_AS((Network{2, {{0, 2}}, 0, 1, std::nullopt}.validate()), DomainError);
  CHECK_THROWS_AS((Network{2, {{0, 0}}, 0, 1, std::nullopt}.validate()), DomainError);
  CHECK_THROWS_AS((Network{2, {{0, 1}, {0, 1}}, 0, 1, std::nullopt}.validate()), DomainError);
  CHECK_THROWS_AS((Network{2, {{0, 1}}, 0, 1, std::vector<double>{1.2}}.validate()), DomainError);
  CHECK_THROWS_AS((Network{2, {{0, 1}}, 0, 1, std::vector<double>{0.5, 0.5}}.validate()), DomainError);
  CHECK_NOTHROW((Network{2, {{0, 1}, {1, 0}}, 0, 1, std::nullopt}.validate()));
}

TEST_CASE("appendix reliability and bound polynomials") {
  const Network net = appendix_network();
  const Polynomial exact = exact_reliability_polynomial(net);
  CHECK(exact == Polynomial{0, 0, 2, 2, -5, 2});
  CHECK(exact == reliability_by_states(net));

  auto list = bound_polynomials(net);
  CHECK(list.front().id == "exact");
  CHECK(bound(list, "exact") == exact);
  CHECK(bound(list, "hunter-lower") == Polynomial{0, 0, 1, 1, -1, 0, Rational(-1, 2)});
  CHECK(bound(list, "kwerel-lower") == Polynomial{0, 0, 1, 1, Rational(-5, 4), 0, Rational(-1, 4)});
  CHECK(bound(list, "bonferroni-lower") == Polynomial{0, 0, 2, 2, -5, 0, -1});
  CHECK(bound(list, "kwerel2-lower") == kwerel2_lower(symbolic_path_event_system(net)).value);

  for (int k = 0; k <= 1000; ++k) {
    Rational x(k, 1000);
    const Rational e = exact.evaluate(x);
    for (const char* id : {"hunter-lower", "kwerel-lower", "bonferroni-lower"}) REQUIRE(bound(list, id).evaluate(x) <= e);
    for (const char* id : {"hunter-upper", "kwerel-upper", "bonferroni-upper"}) REQUIRE(bound(list, id).evaluate(x) >= e);
  }
}

TEST_CASE("numeric reliability") {
  Network net = appendix_network();
  net.arc_reliability = std::vector<double>(6, 1.0);
  CHECK(exact_reliability_numeric(net) == 1.0);
  auto sys = numeric_path_event_system(net);
  for (int v = 0; v < 4; ++v) CHECK(intersection_prob(sys, {v}) == 1.0);
  net.arc_reliability = std::vector<double>(6, 0.0);
  CHECK(exact_reliability_numeric(net) == 0.0);
  net.arc_reliability = std::vector<double>{0.9, 0.8, 0.7, 0.6, 0.5, 0.4};
  const double a = 0.9, b = 0.8, c = 0.7, d = 0.6, e = 0.5, f = 0.4;
  // Condition on arc 3 (a->b) and arc 4 (b->a).
  double r = 0.0;
  for (int s3 = 0; s3 < 2; ++s3)
    for (int s4 = 0; s4 < 2; ++s4) {
      const double w = (s3 ? c : 1 - c) * (s4 ? d : 1 - d);
      const double reach_a = 1 - (1 - a) * (1 - (s4 ? b : 0));
      const double reach_b = 1 - (1 - b) * (1 - (s3 ? a : 0));
      const double both = s3 || s4 ? (s3 && s4 ? 1 - (1 - a) * (1 - b) : (s3 ? a : b)) : a * b;
      // Pr(t reached) = Pr(a)e + Pr(b)f - Pr(a and b)ef
      r += w * (reach_a * e + reach_b * f - both * e * f);
    }
  CHECK(exact_reliability_numeric(net) == doctest::Approx(r).epsilon(1e-12));
  CHECK_THROWS_AS(numeric_path_event_system(appendix_network()), DomainError);
}

TEST_CASE("sweep") {
  const Network net = appendix_network();
  CHECK(parse_sweep_grid("0:1:0.01").size() == 101);
  CHECK(parse_sweep_grid("0:1:0.25") == std::vector<Rational>{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1});
  CHECK_THROWS_AS(parse_sweep_grid("0:1"), ParseError);
  CHECK_THROWS_AS(parse_sweep_grid("0:1:0"), DomainError);
  CHECK_THROWS_AS(parse_sweep_grid("1:0:0.5"), DomainError);

  std::vector<std::string> ids{"hunter-lower", "kwerel-lower", "bonferroni-lower"};
  std::vector<Rational> ends{0, 1};
  auto table = sweep(net, ends, ids);
  CHECK(table.columns == std::vector<std::string>{"p", "exact", "hunter-lower", "kwerel-lower", "bonferroni-lower"});
  CHECK(table.rows[0] == std::vector<Rational>{0, 0, 0, 0, 0});
  CHECK(table.rows[1] == std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 2), -2});
  std::vector<std::string> unknown{"nope"};
  CHECK_THROWS_AS(sweep(net, ends, unknown), ParseError);
  std::vector<std::string> unavailable{"seneta-lower"};
  CHECK_THROWS_AS(sweep(net, ends, unavailable), DomainError);
  std::vector<Rational> out_of_range{Rational(3, 2)};
  CHECK_THROWS_AS(sweep(net, out_of_range, ids), DomainError);

  auto grid = parse_sweep_grid("0:1:0.01");
  auto full = sweep(net, grid, ids);
  for (std::size_t i = 0; i < grid.size(); ++i) REQUIRE(full.rows[i][0] == grid[i]);
  // Near p = 1 the tree and mean-path bounds beat the truncated sieve.
  for (std::size_t i = 90; i < grid.size(); ++i) {
    REQUIRE(full.rows[i][2] > full.rows[i][4]);
    REQUIRE(full.rows[i][3] > full.rows[i][4]);
  }
  const std::string csv = to_csv(full);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "p,exact,hunter-lower,kwerel-lower,bonferroni-lower");
  int rows = 0;
  std::string last;
  while (std::getline(lines, line)) {
    ++rows;
    last = line;
  }
  CHECK(rows == 101);
  CHECK(last == "1,1,0.5,0.5,-2");
  CHECK(csv.find("-0,") == std::string::npos);
}
