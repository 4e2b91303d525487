#include "pfrac/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "pfrac/error.hpp"

namespace pfrac {

Polynomial::Polynomial(Rational constant) : coeffs_{std::move(constant)} { normalize(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::monomial(const Rational& coeff, int power) {
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial{-root, Rational(1)}; }

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  Polynomial out(Rational(1));
  for (const auto& r : roots) out *= linear(r);
  return out;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int power) const {
  if (power < 0 || static_cast<std::size_t>(power) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Degree Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivMod divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const int dd = *divisor.degree();
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  if (!dividend.degree() || *dividend.degree() < dd) return {Polynomial(), dividend};
  const int qdeg = *dividend.degree() - dd;
  std::vector<Rational> quot(static_cast<std::size_t>(qdeg) + 1);
  const Rational lead = divisor.leading();
  for (int k = qdeg; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(j);
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

DivMod divide_by_linear(const Polynomial& dividend, const Rational& root) {
  const auto c = dividend.coeffs();
  if (c.size() <= 1) return {Polynomial(), dividend};
  std::vector<Rational> quot(c.size() - 1);
  Rational carry(0);
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = carry * root + c[i];
    quot[i - 1] = carry;
  }
  Rational remainder = carry * root + c[0];
  return {Polynomial(std::move(quot)), Polynomial(std::move(remainder))};
}

Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) {
    throw Error(ErrorCode::InexactDivision,
                "(" + dividend.to_string() + ") / (" + divisor.to_string() + ") leaves remainder " +
                    r.to_string());
  }
  return q;
}

std::optional<Polynomial> poly_sqrt(const Polynomial& p) {
  if (p.is_zero()) return Polynomial();
  const int d = *p.degree();
  if (d % 2 != 0) return std::nullopt;
  const auto top = p.leading().sqrt();
  if (!top) return std::nullopt;

  // Match coefficients of S^2 from the top down: the coefficient of
  // lambda^(2m-j) involves s_m * s_(m-j) twice plus already-known terms.
  const int m = d / 2;
  std::vector<Rational> s(static_cast<std::size_t>(m) + 1);
  s[static_cast<std::size_t>(m)] = *top;
  const Rational twice_top = *top * Rational(2);
  for (int j = 1; j <= m; ++j) {
    Rational acc = p.coeff(2 * m - j);
    for (int i = 1; i < j; ++i) {
      acc -= s[static_cast<std::size_t>(m - i)] * s[static_cast<std::size_t>(m - j + i)];
    }
    s[static_cast<std::size_t>(m - j)] = acc / twice_top;
  }
  Polynomial root(std::move(s));
  if (root * root != p) return std::nullopt;
  return root;
}

namespace {

mpz_class lcm_of_denominators(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    const mpz_class den = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<mpz_class> divisors{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t count = divisors.size();
    mpz_class power = 1;
    for (int e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  return divisors;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::DivisionByZero, "roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  Polynomial rest = p * Rational(lcm_of_denominators(p), mpz_class(1));

  int zero_mult = 0;
  while (!rest.is_constant() && rest.coeff(0).is_zero()) {
    rest = divide_by_linear(rest, Rational(0)).quotient;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
  if (rest.is_constant()) return roots;

  const auto numerators = positive_divisors(rest.coeff(0).numerator());
  const auto denominators = positive_divisors(rest.leading().numerator());
  std::vector<Rational> candidates;
  for (const auto& num : numerators) {
    for (const auto& den : denominators) {
      candidates.emplace_back(num, den);
      candidates.emplace_back(-num, den);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& c : candidates) {
    int mult = 0;
    while (!rest.is_constant()) {
      auto [q, r] = divide_by_linear(rest, c);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) roots.push_back({c, mult});
    if (rest.is_constant()) break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return roots;
}

}  // namespace pfrac
