#include <doctest.h>

#include "chordsieve/errors.hpp"
#include "chordsieve/polynomial.hpp"
#include "chordsieve/random.hpp"

using namespace chordsieve;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational(" 2.5E1 ") == Rational(25));
  CHECK(parse_rational("0.5/0.25") == Rational(2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(to_fraction_string(Rational(6, 4)) == "3/2");
  CHECK(to_fraction_string(Rational(2)) == "2/1");
  CHECK(to_short_string(Rational(-5, 4)) == "-5/4");
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("polynomial arithmetic is exact and trimmed") {
  const Polynomial p = Polynomial::variable();
  Polynomial one_minus_p = Polynomial(1) - p;
  CHECK(one_minus_p.coefficients() == std::vector<Rational>{1, -1});
  CHECK((p * one_minus_p + p * p).coefficients() == std::vector<Rational>{0, 1});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK((p * p * p).degree() == 3);
  CHECK((Polynomial{2, 0, 4} / 4) == Polynomial{Rational(1, 2), 0, 1});
  CHECK_THROWS_AS(p / 0, DomainError);
  CHECK(Polynomial{0, 0, 0} == Polynomial());
  CHECK(-Polynomial{1, -2} == Polynomial{-1, 2});
}

TEST_CASE("polynomial evaluation") {
  Polynomial r{0, 0, 2, 2, -5, 2};
  CHECK(r.evaluate(Rational(1)) == 1);
  CHECK(r.evaluate(Rational(0)) == 0);
  CHECK(r.evaluate(Rational(1, 2)) == Rational(2, 4) + Rational(2, 8) - Rational(5, 16) + Rational(2, 32));
  CHECK(r.evaluate(0.5) == doctest::Approx(to_double(r.evaluate(Rational(1, 2)))));
}

TEST_CASE("polynomial text forms") {
  Polynomial r{0, 0, 2, 2, -5, 2};
  CHECK(r.to_string() == "2p^2 + 2p^3 - 5p^4 + 2p^5");
  CHECK(Polynomial{0, 0, 1, 1, -1, 0, Rational(-1, 2)}.to_string() == "p^2 + p^3 - p^4 - (1/2)p^6");
  CHECK(Polynomial{-1, 1}.to_string() == "-1 + p");
  CHECK(Polynomial().to_string() == "0");
  CHECK(r.to_coefficient_string() == "0/1 0/1 2/1 2/1 -5/1 2/1");
  CHECK(Polynomial().to_coefficient_string() == "0/1");
  CHECK(Polynomial::from_coefficient_string("0/1 0/1 1/1 1/1 -5/4 0/1 -1/4") ==
        Polynomial{0, 0, 1, 1, Rational(-5, 4), 0, Rational(-1, 4)});
  CHECK_THROWS_AS(Polynomial::from_coefficient_string(""), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(1);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, 5);
  auto random_poly = [&] {
    std::vector<Rational> c;
    for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(coef(rng), 1 + std::abs(coef(rng)));
    return Polynomial(c);
  };
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_poly(), b = random_poly(), c = random_poly();
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) - b == a);
    REQUIRE(Polynomial::from_coefficient_string(a.to_coefficient_string()) == a);
    Rational x(coef(rng), 7);
    REQUIRE((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
  }
}
