#pragma once

#include <vector>

#include "pfrac/alpha_types.hpp"

namespace pfrac {

// Mumford-style coordinates on the affine Jacobian of mu^2 = R(lambda):
// U monic of degree g, W monic of degree g+1, deg V <= g-1, V^2 + UW = R.
class JacobiTriple {
 public:
  // Throws InvalidJacobiTriple when any condition above fails.
  JacobiTriple(Polynomial U, Polynomial V, Polynomial W, Polynomial R);

  const Polynomial& U() const noexcept { return U_; }
  const Polynomial& V() const noexcept { return V_; }
  const Polynomial& W() const noexcept { return W_; }
  const Polynomial& R() const noexcept { return R_; }
  int genus() const noexcept { return *U_.degree(); }

  friend bool operator==(const JacobiTriple&, const JacobiTriple&) = default;

 private:
  Polynomial U_;
  Polynomial V_;
  Polynomial W_;
  Polynomial R_;
};

struct CurvePoint {
  Rational lambda;
  Rational mu;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

struct Divisor {
  std::vector<CurvePoint> points;
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

// U = prod(lambda - lambda_i), V the Lagrange interpolant of the mu_i,
// W = (R - V^2) / U. Throws PointOffCurve, SpecialDivisor, RepeatedAbscissa,
// InvalidDivisor (wrong number of points or R not monic of odd degree).
JacobiTriple jacobi_from_divisor(const Divisor& d, const Polynomial& R);

// Points (lambda_i, V(lambda_i)) over the rational roots of U, in ascending
// lambda. Throws IrrationalSupport when U does not split over Q and
// RepeatedAbscissa when U has a repeated root.
Divisor divisor_from_jacobi(const JacobiTriple& j);

// A = U, B = V + beta U, C = -W + 2 beta V + beta^2 U.
AlphaTriple alpha_triple_from_jacobi(const JacobiTriple& j, const Rational& beta);

struct JacobiWithShift {
  JacobiTriple jacobi;
  Rational beta;
};

// beta = coefficient of lambda^g in B; U = A, V = B - beta A,
// W = -C + 2 beta B - beta^2 A. Throws InvalidTriple on a malformed triple.
JacobiWithShift jacobi_from_alpha_triple(const AlphaTriple& t);

// Rational beta with C(alpha_N) = 0 for the triple alpha_triple_from_jacobi(j, beta):
// roots of U(a) beta^2 + 2 V(a) beta - W(a) = 0 at a = alpha_N, ordered as
// -(V(a) + sqrt R(a)) / U(a), then -(V(a) - sqrt R(a)) / U(a). A single root
// W(a) / (2 V(a)) when U(a) = 0. Throws RootOfR or IrrationalBeta.
std::vector<Rational> pure_beta_candidates(const JacobiTriple& j, const Rational& alpha_n);

}  // namespace pfrac
