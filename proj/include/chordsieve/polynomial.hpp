#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "chordsieve/rational.hpp"

namespace chordsieve {

// Univariate polynomial in the arc reliability p with exact rational
// coefficients. coefficients()[k] multiplies p^k; trailing zeros are
// always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  // The monomial p.
  static Polynomial variable();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& p) const;
  double evaluate(double p) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  // Exact division by a non-zero integer scalar.
  Polynomial& operator/=(std::int64_t divisor);
  Polynomial& operator/=(const Rational& divisor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator/(Polynomial a, std::int64_t d) { return a /= d; }
  friend Polynomial operator/(Polynomial a, const Rational& d) { return a /= d; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Ascending-degree human form, e.g. "2p^2 + 2p^3 - 5p^4 + 2p^5".
  std::string to_string() const;
  // Space separated "c0 c1 c2 ..." with every entry written as "num/den".
  // The zero polynomial is written as "0/1".
  std::string to_coefficient_string() const;
  static Polynomial from_coefficient_string(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace chordsieve
