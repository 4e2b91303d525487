#include "pfrac/alphafrac.hpp"

#include <complex>
#include <sstream>
#include <string>

#include "pfrac/error.hpp"

namespace pfrac {
namespace {

const Rational kHalf(1, 2);

PolyMatrix2 elementary(const Rational& b, const Rational& alpha) {
  return {Polynomial(b), Polynomial::linear(alpha), Polynomial(1), Polynomial()};
}

// Divides p by (lambda - root); a non-zero remainder means the caller broke an
// invariant that should have made root a zero of p.
Polynomial divide_out(const Polynomial& p, const Rational& root, int step) {
  auto [q, r] = divide_by_linear(p, root);
  if (!r.is_zero()) {
    throw Error(ErrorCode::ResidueNotUnipotent,
                "non-zero remainder " + r.to_string() + " at peeling step " + std::to_string(step));
  }
  return q;
}

std::string mismatch(const Polynomial& expected, const Polynomial& actual) {
  if (expected == actual) return "ok";
  return "expected " + expected.to_string() + ", got " + actual.to_string();
}

}  // namespace

std::vector<ConvergentPair> convergents(const Expansion& e) {
  const int n = e.period();
  std::vector<ConvergentPair> out;
  out.reserve(static_cast<std::size_t>(n) + 2);
  out.push_back({Polynomial(1), Polynomial(), -1});
  out.push_back({Polynomial(e.b0()), Polynomial(1), 0});
  for (int k = 1; k <= n; ++k) {
    const Rational bk = k == n ? e.tail() : e.b(k);
    const Polynomial ak = Polynomial::linear(e.alpha()[k - 1]);
    const auto& prev = out[static_cast<std::size_t>(k)];
    const auto& prev2 = out[static_cast<std::size_t>(k - 1)];
    out.push_back({prev.P * bk + ak * prev2.P, prev.Q * bk + ak * prev2.Q, k});
  }
  return out;
}

PolyMatrix2 transfer_matrix_product(const Expansion& e) {
  PolyMatrix2 m = PolyMatrix2::identity();
  for (int k = 1; k <= e.period(); ++k) m = m * elementary(e.b(k - 1), e.alpha()[k - 1]);
  return m * PolyMatrix2(Polynomial(1), Polynomial(e.tail()), Polynomial(), Polynomial(1));
}

TripleWithTrace expansion_to_triple(const Expansion& e) {
  const auto conv = convergents(e);
  const int n = e.period();
  const auto& last = conv[static_cast<std::size_t>(n) + 1];
  const auto& before = conv[static_cast<std::size_t>(n)];

  TripleWithTrace out{{before.Q, (last.Q - before.P) * kHalf, -last.P}, (before.P + last.Q) * kHalf};
  try {
    if (check_triple_shape(out.triple) != e.alpha().genus()) {
      throw Error(ErrorCode::InvalidTriple, "A has degree " + out.triple.A.to_string());
    }
  } catch (const Error& err) {
    throw Error(ErrorCode::DegenerateExpansion, err.detail());
  }
  return out;
}

Polynomial admissible_decompose(const Polynomial& R, const AlphaSequence& alpha) {
  if (!R.is_monic() || *R.degree() != alpha.size()) {
    throw Error(ErrorCode::NotMonic,
                "R must be monic of degree " + std::to_string(alpha.size()) + ", got " + R.to_string());
  }
  const Polynomial diff = R - alpha.polynomial();
  auto s = poly_sqrt(diff);
  if (!s || s->degree() > alpha.genus()) {
    throw Error(ErrorCode::NotAdmissible,
                "R - prod(lambda - alpha_k) = " + diff.to_string() + " is not a square of degree <= " +
                    std::to_string(alpha.genus()));
  }
  return *s;
}

TransferMatrix build_transfer_matrix(const AlphaTriple& t, const Polynomial& half_trace,
                                     const AlphaSequence& alpha) {
  if (half_trace * half_trace + alpha.polynomial() != t.discriminant()) {
    throw Error(ErrorCode::TraceMismatch,
                "T^2 + prod(lambda - alpha_k) != B^2 - AC for T = " + half_trace.to_string());
  }
  return {{half_trace - t.B, -t.C, t.A, half_trace + t.B}, half_trace};
}

Expansion factorize_transfer_matrix(const TransferMatrix& tm, const AlphaSequence& alpha) {
  const Polynomial target = -alpha.polynomial();
  if (tm.m.det() != target) {
    throw Error(ErrorCode::DeterminantMismatch,
                "det M = " + tm.m.det().to_string() + ", expected " + target.to_string());
  }

  const int n = alpha.size();
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(n) + 1);
  PolyMatrix2 cur = tm.m;
  for (int k = 0; k < n; ++k) {
    const Rational& a = alpha[k];
    const Rational x = cur(0, 0).eval(a);
    const Rational y = cur(0, 1).eval(a);
    const Rational z = cur(1, 0).eval(a);
    const Rational w = cur(1, 1).eval(a);
    // (1, -b) spans the kernel of M^T(alpha_{k+1}).
    Rational bk;
    if (!z.is_zero()) {
      bk = x / z;
    } else if (x.is_zero() && !w.is_zero()) {
      bk = y / w;
    } else {
      throw Error(ErrorCode::FactorizationDegenerate,
                  "null vector has zero first component at step " + std::to_string(k) + " (alpha = " +
                      a.to_string() + ")");
    }
    PolyMatrix2 next(cur(1, 0), cur(1, 1), divide_out(cur(0, 0) - cur(1, 0) * bk, a, k),
                     divide_out(cur(0, 1) - cur(1, 1) * bk, a, k));
    cur = std::move(next);
    b.push_back(std::move(bk));
  }

  if (cur(0, 0) != Polynomial(1) || !cur(1, 0).is_zero() || cur(1, 1) != Polynomial(1) ||
      !cur(0, 1).is_constant()) {
    std::ostringstream os;
    os << "residue " << cur << " is not of the form [[1, c], [0, 1]]";
    throw Error(ErrorCode::ResidueNotUnipotent, os.str());
  }
  Rational b0 = b.front();
  std::vector<Rational> block(b.begin() + 1, b.end());
  block.push_back(cur(0, 1).coeff(0) + b0);
  return Expansion(std::move(b0), std::move(block), alpha);
}

std::pair<Expansion, Expansion> expand(const AlphaTriple& t, const AlphaSequence& alpha) {
  check_triple_shape(t);
  const Polynomial s = admissible_decompose(t.discriminant(), alpha);
  Expansion plus = factorize_transfer_matrix(build_transfer_matrix(t, s, alpha), alpha);
  Expansion minus = factorize_transfer_matrix(build_transfer_matrix(t, -s, alpha), alpha);
  return {std::move(plus), std::move(minus)};
}

Expansion pure_expand(const AlphaTriple& t, const AlphaSequence& alpha) {
  check_triple_shape(t);
  const Rational& last = alpha[alpha.size() - 1];
  if (const Rational c = t.C.eval(last); !c.is_zero()) {
    throw Error(ErrorCode::NotPure, "C(alpha_N) = " + c.to_string() + " != 0");
  }
  const Rational b_last = t.B.eval(last);
  if (b_last.is_zero()) throw Error(ErrorCode::NonGenericPure, "B(alpha_N) = 0");

  const Polynomial s = admissible_decompose(t.discriminant(), alpha);
  // C(alpha_N) = 0 forces S(alpha_N) = +-B(alpha_N); pick the sign with T(alpha_N) = -B(alpha_N).
  const Polynomial half_trace = s.eval(last) == -b_last ? s : -s;
  if (half_trace.eval(last) != -b_last) {
    throw Error(ErrorCode::NotPure, "no sign of S satisfies T(alpha_N) = -B(alpha_N)");
  }
  Expansion e = factorize_transfer_matrix(build_transfer_matrix(t, half_trace, alpha), alpha);
  if (!e.is_pure()) {
    throw Error(ErrorCode::ResidueNotUnipotent, "pure factorization left b_N* = " + e.tail().to_string());
  }
  return e;
}

VerificationReport verify_expansion(const Expansion& e, const AlphaTriple& t) {
  VerificationReport report;
  const auto conv = convergents(e);
  const int n = e.period();
  const auto& last = conv[static_cast<std::size_t>(n) + 1];
  const auto& before = conv[static_cast<std::size_t>(n)];

  const Polynomial a = before.Q;
  const Polynomial b = (last.Q - before.P) * kHalf;
  const Polynomial c = -last.P;
  report.checks.push_back({"A", a == t.A, mismatch(t.A, a)});
  report.checks.push_back({"B", b == t.B, mismatch(t.B, b)});
  report.checks.push_back({"C", c == t.C, mismatch(t.C, c)});

  const Polynomial det = last.P * before.Q - before.P * last.Q;
  const Polynomial prod = e.alpha().polynomial();
  report.checks.push_back({"determinant_identity", det == prod, mismatch(prod, det)});

  report.pass = true;
  for (const auto& check : report.checks) report.pass = report.pass && check.pass;
  return report;
}

double numeric_residual(const AlphaTriple& t, const Rational& lambda0, Branch branch) {
  const Rational a_exact = t.A.eval(lambda0);
  if (a_exact.is_zero()) {
    throw Error(ErrorCode::PoleAtLambda, "A(" + lambda0.to_string() + ") = 0");
  }
  using cplx = std::complex<double>;
  const cplx a(a_exact.to_double());
  const cplx b(t.B.eval(lambda0).to_double());
  const cplx c(t.C.eval(lambda0).to_double());
  const cplx root = std::sqrt(cplx(t.discriminant().eval(lambda0).to_double()));
  const cplx phi = (-b + (branch == Branch::Plus ? root : -root)) / a;
  return std::abs(a * phi * phi + 2.0 * b * phi + c);
}

}  // namespace pfrac
