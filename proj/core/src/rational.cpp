#include "pfrac/rational.hpp"

#include <cctype>
#include <utility>

#include "pfrac/error.hpp"

namespace pfrac {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

}  // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::InvalidRational, "cannot parse rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  const mpz_class d(std::string(den), 10);
  if (sgn(d) == 0) {
    throw Error(ErrorCode::InvalidRational, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::optional<Rational> Rational::sqrt() const {
  auto num = exact_sqrt(value_.get_num());
  if (!num) return std::nullopt;
  auto den = exact_sqrt(value_.get_den());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace pfrac
