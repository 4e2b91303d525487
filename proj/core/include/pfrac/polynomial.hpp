#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pfrac/rational.hpp"

namespace pfrac {

// Degree of a polynomial. The zero polynomial has no degree (std::nullopt),
// which std::optional orders below every integer.
using Degree = std::optional<int>;

// Dense univariate polynomial over Q in the variable lambda.
// coeffs()[i] is the coefficient of lambda^i; the top entry is never zero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial monomial(const Rational& coeff, int power);
  // lambda - root
  static Polynomial linear(const Rational& root);
  // prod_i (lambda - roots[i])
  static Polynomial from_roots(std::span<const Rational> roots);

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  Rational coeff(int power) const;
  Degree degree() const noexcept;
  // Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }
  bool is_anti_monic() const { return !is_zero() && coeffs_.back() == Rational(-1); }

  Rational eval(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division; throws DivisionByZero for a zero divisor.
DivMod divmod(const Polynomial& dividend, const Polynomial& divisor);

// Synthetic division by (lambda - root).
DivMod divide_by_linear(const Polynomial& dividend, const Rational& root);

// dividend / divisor, throwing InexactDivision when the remainder is non-zero.
Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor);

// S with S*S == p over Q, leading coefficient positive (S = 0 iff p = 0).
std::optional<Polynomial> poly_sqrt(const Polynomial& p);

// Distinct rational roots of p in ascending order, each with its multiplicity.
struct RationalRoot {
  Rational value;
  int multiplicity;
};
std::vector<RationalRoot> rational_roots(const Polynomial& p);

}  // namespace pfrac
