#pragma once

#include <compare>
#include <span>
#include <vector>

#include "pfrac/poly_matrix.hpp"
#include "pfrac/polynomial.hpp"
#include "pfrac/rational.hpp"

namespace pfrac {

// Parameters alpha_1..alpha_N of a periodic alpha-fraction. N = 2g+1 is odd
// and the entries are pairwise distinct. Indexing is 0-based: alpha[k-1] is
// alpha_k.
class AlphaSequence {
 public:
  explicit AlphaSequence(std::vector<Rational> alphas);

  int size() const noexcept { return static_cast<int>(alphas_.size()); }
  int genus() const noexcept { return (size() - 1) / 2; }
  const Rational& operator[](int index) const { return alphas_[static_cast<std::size_t>(index)]; }
  std::span<const Rational> values() const noexcept { return alphas_; }

  // prod_k (lambda - alpha_k)
  Polynomial polynomial() const { return Polynomial::from_roots(alphas_); }

  // alpha with alpha_k and alpha_{k+1} exchanged (1 <= k <= N-1).
  AlphaSequence swapped(int k) const;
  AlphaSequence reversed() const;

  friend bool operator==(const AlphaSequence&, const AlphaSequence&) = default;
  friend auto operator<=>(const AlphaSequence&, const AlphaSequence&) = default;

 private:
  std::vector<Rational> alphas_;
};

// [b0; b1, ..., bN]_alpha, periodic in b1..bN and alpha.
class Expansion {
 public:
  Expansion(Rational b0, std::vector<Rational> block, AlphaSequence alpha);

  const Rational& b0() const noexcept { return b0_; }
  std::span<const Rational> block() const noexcept { return block_; }
  const AlphaSequence& alpha() const noexcept { return alpha_; }
  int period() const noexcept { return alpha_.size(); }

  // b_i for 0 <= i <= N.
  const Rational& b(int i) const { return i == 0 ? b0_ : block_[static_cast<std::size_t>(i - 1)]; }
  // b_N* = b_N - b_0
  Rational tail() const { return block_.back() - b0_; }
  bool is_pure() const { return block_.back() == b0_; }

  // Canonical order: alpha order first, then b0, then the block.
  friend bool operator==(const Expansion&, const Expansion&) = default;
  friend std::strong_ordering operator<=>(const Expansion& lhs, const Expansion& rhs);

 private:
  Rational b0_;
  std::vector<Rational> block_;
  AlphaSequence alpha_;
};

// (A, B, C) with A monic of degree g, C anti-monic of degree g+1 and
// deg B <= g. Admissibility of B^2 - AC depends on alpha and is checked by
// admissible_decompose().
struct AlphaTriple {
  Polynomial A;
  Polynomial B;
  Polynomial C;

  Polynomial discriminant() const { return B * B - A * C; }
  friend bool operator==(const AlphaTriple&, const AlphaTriple&) = default;
};

// Throws InvalidTriple unless the degree / monicity conditions hold.
// Returns g.
int check_triple_shape(const AlphaTriple& t);

struct TransferMatrix {
  PolyMatrix2 m;
  Polynomial half_trace;
};

struct ConvergentPair {
  Polynomial P;
  Polynomial Q;
  int index = 0;
};

}  // namespace pfrac
