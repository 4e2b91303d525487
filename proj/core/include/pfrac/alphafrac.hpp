#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfrac/alpha_types.hpp"

namespace pfrac {

// Convergents P_k, Q_k for k = -1..N, with a_k = lambda - alpha_k and the
// last step taken with b_N* = b_N - b_0.
std::vector<ConvergentPair> convergents(const Expansion& e);

// Ordered product of the elementary factors
//   [[b_{k-1}, lambda - alpha_k], [1, 0]]  (k = 1..N)  times  [[1, b_N*], [0, 1]].
PolyMatrix2 transfer_matrix_product(const Expansion& e);

struct TripleWithTrace {
  AlphaTriple triple;
  Polynomial half_trace;  // T = (P_{N-1} + Q_N) / 2
};

// A = Q_{N-1}, B = (Q_N - P_{N-1})/2, C = -P_N. Throws DegenerateExpansion
// when the result is not a valid alpha-triple.
TripleWithTrace expansion_to_triple(const Expansion& e);

// Canonical S with R = S^2 + prod(lambda - alpha_k) and deg S <= g.
// Throws NotMonic when R is not monic of degree N, NotAdmissible otherwise.
Polynomial admissible_decompose(const Polynomial& R, const AlphaSequence& alpha);

// [[T - B, -C], [A, T + B]]; throws TraceMismatch unless T^2 + prod = B^2 - AC.
TransferMatrix build_transfer_matrix(const AlphaTriple& t, const Polynomial& half_trace,
                                     const AlphaSequence& alpha);

// Peels elementary factors off tm.m at alpha_1, alpha_2, ... and returns the
// expansion they spell. Throws DeterminantMismatch, FactorizationDegenerate
// or ResidueNotUnipotent.
Expansion factorize_transfer_matrix(const TransferMatrix& tm, const AlphaSequence& alpha);

// The two expansions of (-B + sqrt(R))/A, for T = +S first and T = -S second.
std::pair<Expansion, Expansion> expand(const AlphaTriple& t, const AlphaSequence& alpha);

// The pure periodic expansion (b_N = b_0); requires C(alpha_N) = 0 and
// B(alpha_N) != 0.
Expansion pure_expand(const AlphaTriple& t, const AlphaSequence& alpha);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  bool pass = false;
  std::vector<Check> checks;
};

VerificationReport verify_expansion(const Expansion& e, const AlphaTriple& t);

enum class Branch { Plus, Minus };

// |A phi^2 + 2 B phi + C| at lambda0 in double precision, where
// phi = (-B +- sqrt(R)) / A (complex when R(lambda0) < 0).
double numeric_residual(const AlphaTriple& t, const Rational& lambda0, Branch branch);

}  // namespace pfrac
