#include "pfrac/jacobi.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pfrac/error.hpp"

namespace pfrac {
namespace {

std::string point_str(const CurvePoint& p) {
  return "(" + p.lambda.to_string() + ", " + p.mu.to_string() + ")";
}

int curve_genus(const Polynomial& R, ErrorCode code) {
  if (!R.is_monic() || *R.degree() % 2 == 0) {
    throw Error(code, "R must be monic of odd degree, got " + R.to_string());
  }
  return (*R.degree() - 1) / 2;
}

// Lagrange interpolant through (lambda_i, mu_i), degree <= g-1.
Polynomial interpolate(const std::vector<CurvePoint>& pts) {
  Polynomial out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Polynomial basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      basis *= Polynomial::linear(pts[j].lambda);
      denom *= pts[i].lambda - pts[j].lambda;
    }
    out += basis * (pts[i].mu / denom);
  }
  return out;
}

}  // namespace

JacobiTriple::JacobiTriple(Polynomial U, Polynomial V, Polynomial W, Polynomial R)
    : U_(std::move(U)), V_(std::move(V)), W_(std::move(W)), R_(std::move(R)) {
  const int g = curve_genus(R_, ErrorCode::InvalidJacobiTriple);
  if (!U_.is_monic() || *U_.degree() != g) {
    throw Error(ErrorCode::InvalidJacobiTriple,
                "U must be monic of degree " + std::to_string(g) + ", got " + U_.to_string());
  }
  if (!W_.is_monic() || *W_.degree() != g + 1) {
    throw Error(ErrorCode::InvalidJacobiTriple,
                "W must be monic of degree " + std::to_string(g + 1) + ", got " + W_.to_string());
  }
  if (V_.degree() > g - 1) {
    throw Error(ErrorCode::InvalidJacobiTriple,
                "V must have degree <= " + std::to_string(g - 1) + ", got " + V_.to_string());
  }
  if (V_ * V_ + U_ * W_ != R_) {
    throw Error(ErrorCode::InvalidJacobiTriple, "V^2 + UW != R");
  }
}

JacobiTriple jacobi_from_divisor(const Divisor& d, const Polynomial& R) {
  const int g = curve_genus(R, ErrorCode::InvalidDivisor);
  if (static_cast<int>(d.points.size()) != g) {
    throw Error(ErrorCode::InvalidDivisor, "expected " + std::to_string(g) + " points, got " +
                                               std::to_string(d.points.size()));
  }
  for (const auto& p : d.points) {
    if (p.mu * p.mu != R.eval(p.lambda)) {
      throw Error(ErrorCode::PointOffCurve, point_str(p) + " is not on mu^2 = R(lambda)");
    }
  }
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    for (std::size_t j = i + 1; j < d.points.size(); ++j) {
      const auto& p = d.points[i];
      const auto& q = d.points[j];
      if (p.lambda != q.lambda) continue;
      if (p.mu == -q.mu) {
        throw Error(ErrorCode::SpecialDivisor, point_str(p) + " and " + point_str(q) + " are exchanged by the involution");
      }
      throw Error(ErrorCode::RepeatedAbscissa, "points " + std::to_string(i) + " and " + std::to_string(j) +
                                                   " share lambda = " + p.lambda.to_string());
    }
  }

  std::vector<Rational> lambdas;
  for (const auto& p : d.points) lambdas.push_back(p.lambda);
  Polynomial U = Polynomial::from_roots(lambdas);
  Polynomial V = interpolate(d.points);
  Polynomial W = exact_divide(R - V * V, U);
  return JacobiTriple(std::move(U), std::move(V), std::move(W), R);
}

Divisor divisor_from_jacobi(const JacobiTriple& j) {
  const auto roots = rational_roots(j.U());
  int found = 0;
  for (const auto& r : roots) {
    if (r.multiplicity > 1) {
      throw Error(ErrorCode::RepeatedAbscissa,
                  "U has the repeated root " + r.value.to_string() + "; colliding points are not supported");
    }
    ++found;
  }
  if (found != j.genus()) {
    throw Error(ErrorCode::IrrationalSupport, "U = " + j.U().to_string() + " does not split over Q");
  }
  Divisor d;
  for (const auto& r : roots) {
    CurvePoint p{r.value, j.V().eval(r.value)};
    if (p.mu * p.mu != j.R().eval(p.lambda)) {
      throw Error(ErrorCode::PointOffCurve, point_str(p) + " is not on mu^2 = R(lambda)");
    }
    d.points.push_back(std::move(p));
  }
  return d;
}

AlphaTriple alpha_triple_from_jacobi(const JacobiTriple& j, const Rational& beta) {
  return {j.U(), j.V() + j.U() * beta,
          -j.W() + j.V() * (Rational(2) * beta) + j.U() * (beta * beta)};
}

JacobiWithShift jacobi_from_alpha_triple(const AlphaTriple& t) {
  const int g = check_triple_shape(t);
  Rational beta = t.B.coeff(g);
  JacobiTriple j(t.A, t.B - t.A * beta, -t.C + t.B * (Rational(2) * beta) - t.A * (beta * beta),
                 t.discriminant());
  return {std::move(j), std::move(beta)};
}

std::vector<Rational> pure_beta_candidates(const JacobiTriple& j, const Rational& alpha_n) {
  const Rational r = j.R().eval(alpha_n);
  if (r.is_zero()) throw Error(ErrorCode::RootOfR, "R(" + alpha_n.to_string() + ") = 0");
  const Rational u = j.U().eval(alpha_n);
  const Rational v = j.V().eval(alpha_n);
  const Rational w = j.W().eval(alpha_n);
  if (u.is_zero()) {
    // r = v^2 here, so v != 0.
    return {w / (Rational(2) * v)};
  }
  const auto root = r.sqrt();
  if (!root) {
    throw Error(ErrorCode::IrrationalBeta, "R(" + alpha_n.to_string() + ") = " + r.to_string() +
                                               " is not a rational square");
  }
  return {-(v + *root) / u, -(v - *root) / u};
}

}  // namespace pfrac
